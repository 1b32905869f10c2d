#pragma once

// Certified extraction of the projective limit Xi = (1, xi, xi^2).
//
// Rigorous route: once two consecutive w_k are entrywise sign-definite,
// every later w_m is (up to sign) a word in them, the column cones nest,
// and the limit direction (1, xi) lies in every cone. The column ratios
// of w_m therefore bracket xi exactly, with width |det w_m| / (a b)
// shrinking like e^{(alpha - 2 beta) p_m}.
//
// Fallback (sign-indefinite ladders): empirical-contraction tail bound on
// the ratio sequence y_{i,1}/y_{i,0}; certified only under the measured
// contraction factor, and flagged as such.

#include <memory>
#include <stdexcept>

#include "sturmlab/interval.hpp"
#include "sturmlab/sturm.hpp"

namespace sturmlab {

class XiDepthError : public std::runtime_error {
  public:
    XiDepthError(const std::string& what, Rat achieved)
        : std::runtime_error(what), achieved_width(std::move(achieved)) {}
    Rat achieved_width;
};

struct XiResult {
    CertReal value;
    bool cone_certified = false;
    long depth_used = 0;
};

namespace detail {

inline bool sign_definite(const IntMat2& m) {
    return (m.a >= 0 && m.b >= 0 && m.c >= 0 && m.d >= 0) ||
           (m.a <= 0 && m.b <= 0 && m.c <= 0 && m.d <= 0);
}

/// Column-ratio bracket of a sign-definite invertible matrix; nullopt when
/// a zero entry blocks the ratio.
inline std::optional<Interval> column_bracket(const IntMat2& m) {
    Int a = abs(m.a), b = abs(m.b), c = abs(m.c), d = abs(m.d);
    if (a == 0 || b == 0) return std::nullopt;
    Rat r1 = make_rat(c, a), r2 = make_rat(d, b);
    return r1 <= r2 ? Interval(r1, r2) : Interval(r2, r1);
}

struct ConeState {
    SturmSeq* seq;
    long k0;      // both w_{k0}, w_{k0+1} sign-definite
    long m;       // deepest rung used so far
    Interval best;
    long k_budget;

    Interval refine(long bits) {
        Rat target = pow2(-bits);
        while (best.width() > target && m - k0 < k_budget) {
            ++m;
            if (auto br = column_bracket(seq->w(m))) best = intersect(best, *br);
        }
        return best;
    }
};

}  // namespace detail

/// Full extraction with certification provenance. The returned CertReal's
/// refinement recipe borrows `seq`; keep it alive while refining.
inline XiResult xi_extract(SturmSeq& seq, long precision_bits, long k_budget = 512) {
    if (!seq.admissible()) throw std::domain_error("xi: sequence not admissible");

    // Look for a sign-definite pair of consecutive rungs.
    std::optional<long> k0;
    for (long k = 0; k <= 12; ++k) {
        if (detail::sign_definite(seq.w(k)) && detail::sign_definite(seq.w(k + 1))) {
            k0 = k;
            break;
        }
    }

    if (k0) {
        auto st = std::make_shared<detail::ConeState>();
        st->seq = &seq;
        st->k0 = *k0;
        st->m = *k0 + 1;
        st->k_budget = k_budget;
        // Seed interval: first usable bracket.
        std::optional<Interval> seed;
        while (!seed && st->m - st->k0 < k_budget) {
            ++st->m;
            seed = detail::column_bracket(seq.w(st->m));
        }
        if (!seed) throw XiDepthError("xi: no usable column bracket", Rat(1));
        st->best = *seed;
        CertReal val(st->best, [st](long bits) { return st->refine(bits); });
        if (!val.refine_to_width(pow2(-precision_bits), std::max(precision_bits * 4, 1L << 14)))
            throw XiDepthError("xi: insufficient depth for requested precision", val.width());
        return {val, true, st->m};
    }

    // Empirical-contraction fallback on the y-ratio sequence.
    const long i_hi = 40;
    std::vector<Rat> r;
    for (long i = 5; i <= i_hi; ++i) {
        RatPoint y = seq.y(i);
        if (y.x0 == 0) continue;
        r.push_back(y.x1 / y.x0);
    }
    if (r.size() < 8) throw XiDepthError("xi: too few usable ratio samples", Rat(1));
    std::vector<Rat> d;
    for (size_t j = 0; j + 1 < r.size(); ++j) d.push_back(abs(Rat(r[j + 1] - r[j])));
    Rat contraction(0);
    for (size_t j = d.size() / 2; j + 1 < d.size(); ++j) {
        if (d[j] == 0) continue;
        Rat ratio = d[j + 1] / d[j];
        if (ratio > contraction) contraction = ratio;
    }
    if (contraction >= make_rat(3, 4))
        throw XiDepthError("xi: ratio sequence not contracting", d.back());
    Rat tail = d.back() * contraction / (Rat(1) - contraction) + d.back();
    Interval iv(r.back() - tail, r.back() + tail);
    XiResult out{CertReal(iv), false, i_hi};
    if (iv.width() > pow2(-precision_bits))
        throw XiDepthError("xi: insufficient depth for requested precision", iv.width());
    return out;
}

inline CertReal xi(SturmSeq& seq, long precision_bits) {
    return xi_extract(seq, precision_bits).value;
}

}  // namespace sturmlab
