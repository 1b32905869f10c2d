#pragma once

// Test-only independent oracles. Continued fractions are evaluated here
// directly from the partial quotients, never through the ladder code they
// are checking.

#include <vector>

#include "sturmlab/interval.hpp"
#include "sturmlab/numeric.hpp"

namespace sturmlab::oracle {

/// Exact enclosure of [0; a_1, a_2, ...] from consecutive convergents,
/// which always bracket the value.
inline Interval cf_enclosure(const std::vector<long>& partial_quotients) {
    Int h0 = 1, h1 = 0;  // numerators for [0; ...]
    Int k0 = 0, k1 = 1;
    Rat prev, cur;
    for (size_t n = 0; n < partial_quotients.size(); ++n) {
        Int a = partial_quotients[n];
        Int h2 = a * h1 + h0;
        Int k2 = a * k1 + k0;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        prev = cur;
        cur = make_rat(h1, k1);
        if (n == 0) prev = cur;
    }
    return prev <= cur ? Interval(prev, cur) : Interval(cur, prev);
}

}  // namespace sturmlab::oracle
