#pragma once

// Growth parameters of a psi-Sturmian matrix sequence:
//   |det(w_k)| ~ e^{alpha p_k},  ||w_k|| ~ e^{beta p_k},
//   cont(w_k) = e^{p_k (rho + o(1))},  delta = (alpha - 2 rho)/beta.
// Finite-depth honesty: every estimate is a trailing-window bracket, and
// the multiplicative-growth constant is reported as the observed extremes
// of ||w_k^{l+1} w_{k-1}|| / (||w_k|| ||w_k^l w_{k-1}||).

#include <vector>

#include "sturmlab/interval.hpp"
#include "sturmlab/sturm.hpp"

namespace sturmlab {

struct GrowthReport {
    long k_max = 0;
    std::vector<Interval> log_det_over_p;   // per k = 1..k_max
    std::vector<Interval> log_norm_over_p;  // per k
    std::vector<Interval> log_cont_over_p;  // per k
    std::vector<Interval> delta_samples;    // (log|det| - 2 log cont)/log norm per k
    CertReal alpha, beta, rho, delta;
    bool beta_positive = false;  // certified positive over the window
    Rat c_min, c_max;            // multiplicative-growth bracket (exact rationals)
};

inline GrowthReport growth(SturmSeq& seq, long k_max, long prec = 96) {
    if (k_max < 5) throw std::invalid_argument("growth: k_max must be >= 5");
    GrowthReport rep;
    rep.k_max = k_max;
    const SeqSpec& s = seq.seq();
    std::vector<Int> p = s.p_seq(k_max);

    for (long k = 1; k <= k_max; ++k) {
        IntMat2 wk = seq.w(k);
        Rat pk = Rat(p[static_cast<size_t>(k + 1)]);
        Interval ld = log_interval(abs(Int(wk.det())), prec);
        Interval ln = log_interval(sup_norm(wk), prec);
        Interval lc = log_interval(content(wk), prec);
        rep.log_det_over_p.push_back(ld / pk);
        rep.log_norm_over_p.push_back(ln / pk);
        rep.log_cont_over_p.push_back(lc / pk);
        // delta sample only where log||w_k|| is certainly positive
        if (ln.lo > 0) rep.delta_samples.push_back((ld - lc * Rat(2)) / ln);
    }

    long window = (k_max + 2) / 3;
    // Trailing-window hull inflated by one spread: the honest error bar for
    // quantities that only settle asymptotically.
    auto window_hull = [&](const std::vector<Interval>& v) {
        size_t n = std::min(v.size(), static_cast<size_t>(window));
        Interval acc = v[v.size() - n];
        for (size_t j = v.size() - n + 1; j < v.size(); ++j) acc = hull(acc, v[j]);
        Rat spread = acc.width();
        return Interval(acc.lo - spread, acc.hi + spread);
    };
    rep.alpha = CertReal(window_hull(rep.log_det_over_p));
    rep.beta = CertReal(window_hull(rep.log_norm_over_p));
    rep.rho = CertReal(window_hull(rep.log_cont_over_p));
    rep.delta = rep.delta_samples.empty() ? CertReal(Interval(Rat(0), Rat(2)))
                                          : CertReal(window_hull(rep.delta_samples));
    rep.beta_positive = rep.beta.lo() > 0;

    bool first = true;
    for (long k = std::max<long>(1, k_max - window); k < k_max; ++k) {
        Rat nk = Rat(sup_norm(seq.w(k)));
        IntMat2 v = seq.w(k - 1);
        for (long ell = 0; ell <= s.s(k + 1); ++ell) {
            IntMat2 next = seq.w(k) * v;
            Rat ratio = Rat(sup_norm(next)) / (nk * Rat(sup_norm(v)));
            if (first || ratio < rep.c_min) rep.c_min = ratio;
            if (first || ratio > rep.c_max) rep.c_max = ratio;
            first = false;
            v = next;
        }
    }
    return rep;
}

}  // namespace sturmlab
