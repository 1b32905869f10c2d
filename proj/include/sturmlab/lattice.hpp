#pragma once

// Exact 3-dimensional lattice toolkit: rational positive-definite Gram
// forms, LLL reduction of a Z^3 basis, and Fincke-Pohst style enumeration
// with an exact convex objective minimized along the innermost line.
// Everything is rational; square roots only ever appear as over-covering
// integer bounds.

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "sturmlab/numeric.hpp"
#include "sturmlab/sympoint.hpp"

namespace sturmlab {

using Vec3 = IntPoint;  // lattice vectors live in the same identified Z^3

struct QForm3 {
    // symmetric Gram, row-major upper triangle
    std::array<std::array<Rat, 3>, 3> g;

    Rat eval(const Vec3& x) const {
        Rat q(0);
        std::array<Rat, 3> v{Rat(x.x0), Rat(x.x1), Rat(x.x2)};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) q += g[static_cast<size_t>(i)][static_cast<size_t>(j)] * v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
        return q;
    }

    Rat pair(const Vec3& x, const Vec3& y) const {
        Rat q(0);
        std::array<Rat, 3> a{Rat(x.x0), Rat(x.x1), Rat(x.x2)};
        std::array<Rat, 3> b{Rat(y.x0), Rat(y.x1), Rat(y.x2)};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) q += g[static_cast<size_t>(i)][static_cast<size_t>(j)] * a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
        return q;
    }
};

namespace detail {

inline Vec3 scaled(const Vec3& v, const Int& c) { return {v.x0 * c, v.x1 * c, v.x2 * c}; }

inline Int round_rat(const Rat& q) {
    // nearest integer, ties toward even are irrelevant here
    return floor(q + make_rat(1, 2));
}

/// ceil(sqrt(q)) for q >= 0, as an over-covering integer bound.
inline Int ceil_sqrt(const Rat& q) {
    if (q <= 0) return 0;
    Int n = ceil(q);
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    while (r * r < n) r += 1;
    return r;
}

}  // namespace detail

/// LLL-reduced basis of Z^3 under the given positive-definite form
/// (delta = 0.99). Returns the basis vectors.
inline std::array<Vec3, 3> lll_reduce(const QForm3& q) {
    std::array<Vec3, 3> b{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
    const Rat delta = make_rat(99, 100);

    auto gram_step = [&](std::array<Rat, 3>& norms, std::array<std::array<Rat, 3>, 3>& mu) {
        // Gram-Schmidt over the form q
        std::array<Vec3, 3>& bb = b;
        std::array<std::array<Rat, 3>, 3> dots{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j <= i; ++j)
                dots[static_cast<size_t>(i)][static_cast<size_t>(j)] = q.pair(bb[static_cast<size_t>(i)], bb[static_cast<size_t>(j)]);
        // norms[j] = |b_j*|^2, mu[i][j] = <b_i, b_j*>/norms[j]
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < i; ++j) {
                Rat m = dots[static_cast<size_t>(i)][static_cast<size_t>(j)];
                for (int k = 0; k < j; ++k)
                    m -= mu[static_cast<size_t>(i)][static_cast<size_t>(k)] * mu[static_cast<size_t>(j)][static_cast<size_t>(k)] * norms[static_cast<size_t>(k)];
                mu[static_cast<size_t>(i)][static_cast<size_t>(j)] = m / norms[static_cast<size_t>(j)];
            }
            Rat n = dots[static_cast<size_t>(i)][static_cast<size_t>(i)];
            for (int k = 0; k < i; ++k)
                n -= mu[static_cast<size_t>(i)][static_cast<size_t>(k)] * mu[static_cast<size_t>(i)][static_cast<size_t>(k)] * norms[static_cast<size_t>(k)];
            norms[static_cast<size_t>(i)] = n;
        }
    };

    std::array<Rat, 3> norms{};
    std::array<std::array<Rat, 3>, 3> mu{};
    gram_step(norms, mu);

    int k = 1;
    int guard = 0;
    while (k < 3 && ++guard < 10000) {
        // size-reduce b_k against b_{k-1}..b_0
        for (int j = k - 1; j >= 0; --j) {
            Int c = detail::round_rat(mu[static_cast<size_t>(k)][static_cast<size_t>(j)]);
            if (c != 0) {
                b[static_cast<size_t>(k)] = b[static_cast<size_t>(k)] - detail::scaled(b[static_cast<size_t>(j)], c);
                gram_step(norms, mu);
            }
        }
        // Lovasz condition
        Rat lhs = norms[static_cast<size_t>(k)];
        Rat rhs = (delta - mu[static_cast<size_t>(k)][static_cast<size_t>(k - 1)] * mu[static_cast<size_t>(k)][static_cast<size_t>(k - 1)]) * norms[static_cast<size_t>(k - 1)];
        if (lhs < rhs) {
            std::swap(b[static_cast<size_t>(k)], b[static_cast<size_t>(k - 1)]);
            gram_step(norms, mu);
            k = std::max(1, k - 1);
        } else {
            ++k;
        }
    }
    return b;
}

/// Fincke-Pohst enumeration: visits every lattice line {p + c1 b1} whose
/// prefix cost allows Q < r2, calling visit(line_origin, line_dir,
/// c1_center, c1_halfspan). The visitor owns the exact objective and any
/// exclusions; enumeration covers c3 >= 0 only (symmetric objective).
struct LineVisit {
    Vec3 origin;   // c3 b3 + c2 b2
    Vec3 dir;      // b1
    Int c1_lo, c1_hi;
};

inline void enumerate_lines(const QForm3& q, const std::array<Vec3, 3>& basis, const Rat& r2,
                            const std::function<void(const LineVisit&)>& visit,
                            long node_budget = 200000000) {
    // Cholesky-like data for the ordered basis (b1 innermost).
    std::array<Rat, 3> norms{};
    std::array<std::array<Rat, 3>, 3> mu{};
    std::array<std::array<Rat, 3>, 3> dots{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j <= i; ++j)
            dots[static_cast<size_t>(i)][static_cast<size_t>(j)] = q.pair(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < i; ++j) {
            Rat m = dots[static_cast<size_t>(i)][static_cast<size_t>(j)];
            for (int kk = 0; kk < j; ++kk)
                m -= mu[static_cast<size_t>(i)][static_cast<size_t>(kk)] * mu[static_cast<size_t>(j)][static_cast<size_t>(kk)] * norms[static_cast<size_t>(kk)];
            mu[static_cast<size_t>(i)][static_cast<size_t>(j)] = m / norms[static_cast<size_t>(j)];
        }
        Rat n = dots[static_cast<size_t>(i)][static_cast<size_t>(i)];
        for (int kk = 0; kk < i; ++kk)
            n -= mu[static_cast<size_t>(i)][static_cast<size_t>(kk)] * mu[static_cast<size_t>(i)][static_cast<size_t>(kk)] * norms[static_cast<size_t>(kk)];
        norms[static_cast<size_t>(i)] = n;
    }
    if (norms[0] <= 0 || norms[1] <= 0 || norms[2] <= 0)
        throw std::domain_error("enumerate_lines: form not positive definite");

    long nodes = 0;
    // Q(c) = n3 c3^2 + n2 (c2 + mu32 c3)^2 + n1 (c1 + mu21 c2 + mu31 c3)^2
    Rat n1 = norms[0], n2 = norms[1], n3 = norms[2];
    Rat mu21 = mu[1][0], mu31 = mu[2][0], mu32 = mu[2][1];

    Int c3_hi = detail::ceil_sqrt(r2 / n3);
    for (Int c3 = 0; c3 <= c3_hi; ++c3) {
        Rat rem3 = r2 - n3 * Rat(c3) * Rat(c3);
        if (rem3 < 0) continue;
        // c2 range around -mu32 c3
        Rat center2 = -mu32 * Rat(c3);
        Int span2 = detail::ceil_sqrt(rem3 / n2);
        Int c2_lo = floor(center2) - span2, c2_hi = ceil(center2) + span2;
        for (Int c2 = c2_lo; c2 <= c2_hi; ++c2) {
            if (c3 == 0 && c2 < 0) continue;  // half-space dedupe
            Rat d2 = Rat(c2) - center2;
            Rat rem2 = rem3 - n2 * d2 * d2;
            if (rem2 < 0) continue;
            if (++nodes > node_budget)
                throw std::runtime_error("enumerate_lines: node budget exceeded");
            Rat center1 = -(mu21 * Rat(c2) + mu31 * Rat(c3));
            Int span1 = detail::ceil_sqrt(rem2 / n1);
            LineVisit lv;
            lv.origin = detail::scaled(basis[2], c3) + detail::scaled(basis[1], c2);
            lv.dir = basis[0];
            lv.c1_lo = floor(center1) - span1;
            lv.c1_hi = ceil(center1) + span1;
            visit(lv);
        }
    }
}

}  // namespace sturmlab
