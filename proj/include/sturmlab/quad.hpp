#pragma once

// Best quadratic approximants: the primitive points z~_i read as
// polynomials x0 + x1 X + x2 X^2. For large i the discriminant is
// positive, the near root converges to xi and the far root stays a
// bounded distance away; the minimal-polynomial height of the near root
// is at most the sup-norm of the (primitive) polynomial.

#include <optional>
#include <vector>

#include "sturmlab/interval.hpp"
#include "sturmlab/sturm.hpp"

namespace sturmlab {

struct QuadApprox {
    long i = 0;
    IntPoint poly;       // primitive
    Int disc;            // x1^2 - 4 x0 x2
    bool quadratic = false;  // x2 != 0, disc > 0, near root resolved
    CertReal root_near, root_far;
    Int height;          // minimal-polynomial height of the near root
    Interval near_err;   // |xi - near root|
};

namespace detail {

inline std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        return r;
    }
    return std::nullopt;
}

}  // namespace detail

/// Approximant at ladder index i, or nullopt when the polynomial is not an
/// honest quadratic with separated roots (reported and skipped upstream).
inline std::optional<QuadApprox> quad_approximant(SturmSeq& seq, CertReal& xi, long i,
                                                  long sep_bits = 512) {
    QuadApprox qa;
    qa.i = i;
    qa.poly = primitive_part(seq.z(i));
    qa.disc = qa.poly.x1 * qa.poly.x1 - 4 * qa.poly.x0 * qa.poly.x2;
    if (qa.poly.x2 == 0 || qa.disc <= 0) return std::nullopt;

    CertReal root_disc = sqrt_cert(Rat(qa.disc));
    Rat inv2a = make_rat(1, 2 * qa.poly.x2);
    CertReal rp = (root_disc - Rat(qa.poly.x1)) * inv2a;
    CertReal rm = (root_disc + Rat(qa.poly.x1)) * (-inv2a);

    // Nearness: sign of (xi - midpoint) * (rp - rm).
    CertReal mid = (rp + rm) / Rat(2);
    CertReal gap = rp - rm;
    CertReal side = (xi - mid) * gap;
    long bits = 64;
    while (!certainly_positive(side.interval()) && !certainly_negative(side.interval())) {
        if (bits > sep_bits) return std::nullopt;  // unresolved at small i
        xi.refine_bits(bits);
        side.refine_bits(bits);
        bits *= 2;
    }
    bool near_is_rp = certainly_positive(side.interval());
    qa.root_near = near_is_rp ? rp : rm;
    qa.root_far = near_is_rp ? rm : rp;
    qa.quadratic = true;

    if (auto t = detail::exact_sqrt(qa.disc)) {
        // Rational roots: the near root's minimal polynomial is linear.
        Rat exact = near_is_rp ? make_rat(*t - qa.poly.x1, 2 * qa.poly.x2)
                               : make_rat(-*t - qa.poly.x1, 2 * qa.poly.x2);
        qa.root_near = CertReal(exact);
        qa.height = std::max(abs(num(exact)), abs(den(exact)));
    } else {
        qa.height = sup_norm(qa.poly);
    }
    qa.near_err = abs((xi - qa.root_near).interval());
    return qa;
}

inline std::vector<QuadApprox> quad_approximants(SturmSeq& seq, CertReal& xi, long i_max) {
    std::vector<QuadApprox> out;
    long i0 = seq.seq().t(2) + 1;
    for (long i = i0; i <= i_max; ++i) {
        if (auto qa = quad_approximant(seq, xi, i)) out.push_back(std::move(*qa));
    }
    return out;
}

}  // namespace sturmlab
