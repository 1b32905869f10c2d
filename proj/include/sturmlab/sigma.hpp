#pragma once

// sigma(s) = liminf_k 1/[s_{k+1}; s_k, ..., s_1]. The reversed continued
// fraction equals p_{k+1}/p_k, so for an eventually periodic s the liminf
// is 1/max_j eta_j over the m cyclic classes, where eta_j is the purely
// periodic quadratic irrational of the reversed period. For a finite spec
// only a truncated bracket of observed values exists.

#include <vector>

#include "sturmlab/interval.hpp"
#include "sturmlab/seqspec.hpp"
#include "sturmlab/words.hpp"

namespace sturmlab {

struct SigmaResult {
    CertReal value;
    bool truncated = false;  // true for finite specs: bracket of observed values only
};

namespace detail {

/// Value of the purely periodic continued fraction [c_0; c_1, ..., c_{m-1}, ...]
/// as the positive fixed point of the associated homography.
inline CertReal periodic_cf_value(const std::vector<long>& cycle) {
    IntMat2 m = IntMat2::identity();
    for (long c : cycle) m = m * IntMat2{Int(c), 1, 1, 0};
    // eta = (A eta + B)/(C eta + D): C eta^2 + (D - A) eta - B = 0.
    Int A = m.a, B = m.b, C = m.c, D = m.d;
    Rat disc = Rat((A - D) * (A - D) + 4 * B * C);
    CertReal root = sqrt_cert(disc);
    return (root + Rat(A - D)) / Rat(2 * C);
}

}  // namespace detail

inline SigmaResult sigma(const SeqSpec& s, long depth) {
    if (depth < 1) throw std::invalid_argument("sigma: depth must be >= 1");

    if (!s.is_finite()) {
        // One eta per cyclic class: reversed period read downward from class j.
        const auto& per = s.period();
        long m = static_cast<long>(per.size());
        std::vector<CertReal> etas;
        for (long j = 0; j < m; ++j) {
            std::vector<long> cycle;
            cycle.reserve(static_cast<size_t>(m));
            for (long t = 0; t < m; ++t)
                cycle.push_back(per[static_cast<size_t>(((j - t) % m + m) % m)]);
            etas.push_back(detail::periodic_cf_value(cycle));
        }
        // Enclosure of max_j eta_j is [max lo_j, max hi_j]; no tie breaking needed.
        auto max_enclosure = [](std::vector<CertReal>& v) {
            Interval acc = v.front().interval();
            for (size_t j = 1; j < v.size(); ++j) {
                const Interval& e = v[j].interval();
                acc = Interval(std::max(acc.lo, e.lo), std::max(acc.hi, e.hi));
            }
            return acc;
        };
        CertReal best(max_enclosure(etas), [etas, max_enclosure](long bits) mutable {
            for (auto& e : etas) e.refine_bits(bits);
            return max_enclosure(etas);
        });
        CertReal val = CertReal(Rat(1)) / best;
        val.refine_to_width(pow2(-depth));
        return {val, false};
    }

    // Finite spec: observed values p_k / p_{k+1} over the deepest window.
    long k_hi = std::min(depth, s.max_index() - 1);
    if (k_hi < 1) throw std::invalid_argument("sigma: finite spec too short for requested depth");
    long k_lo = std::max<long>(1, k_hi / 2);
    std::vector<Int> p = s.p_seq(k_hi + 1);
    Rat lo, hi;
    bool first = true;
    for (long k = k_lo; k <= k_hi; ++k) {
        Rat v = make_rat(p[static_cast<size_t>(k + 1)], p[static_cast<size_t>(k + 2)]);
        if (first || v < lo) lo = v;
        if (first || v > hi) hi = v;
        first = false;
    }
    return {CertReal(Interval(lo, hi)), true};
}

}  // namespace sturmlab
