#pragma once

// Diophantine exponents of (xi, xi^2), measured and predicted.
//
// Measured: limsup/liminf estimators over the best-approximation
// sequences. Raw ladders are Pareto-filtered first (norm up, error down);
// the consecutive-ratio formulas presume that ordering. Every estimate is
// a trailing-window bracket, never a point value.
//
// Predicted: the closed forms in (sigma, delta),
//   homega2 = homega2* = 1 + (1-d)(1+s),     hlambda2 = (1-d)(1+s)/homega2,
//   omega2 = omega2* = (2-d)/s + 1-d,        1-d <= lambda2 <= max(1-d, 1/(1-d+s)),
//   lambda_check = (1-d)(1+s)/(2+s) when d < h(s),
//   h(s) = s/2 + 1 - sqrt((s/2)^2 + 1).

#include <algorithm>
#include <optional>
#include <vector>

#include "sturmlab/growth.hpp"
#include "sturmlab/interval.hpp"
#include "sturmlab/quad.hpp"
#include "sturmlab/sturm.hpp"
#include "sturmlab/xi.hpp"

namespace sturmlab {

struct ExponentBracket {
    Interval bracket{Rat(0), Rat(0)};
    std::vector<std::pair<long, Interval>> samples;
    bool valid = false;
};

struct ExponentSet {
    ExponentBracket lambda2, lambda2_hat, omega2, omega2_hat;
    ExponentBracket omega2_star, omega2_star_hat, lambda_check;
    std::optional<Interval> beta0;  // 1/lambda_check, shown when lambda_check > 1/2
    long i_max = 0;
};

namespace detail {

/// Enclosure of ||p ^ Xi|| for an integer point p, Xi = (1, xi, xi^2).
inline Interval wedge_norm(const IntPoint& p, const Interval& xi) {
    // cross((p0,p1,p2), (1, x, x^2)) = (p1 x^2 - p2 x, p2 - p0 x^2, p0 x - p1)
    Interval x2 = xi * xi;
    Interval w0 = x2 * Rat(p.x1) - xi * Rat(p.x2);
    Interval w1 = Interval(Rat(p.x2)) - x2 * Rat(p.x0);
    Interval w2 = xi * Rat(p.x0) - Interval(Rat(p.x1));
    Interval n = abs(w0);
    n = Interval(std::max(n.lo, abs(w1).lo), std::max(n.hi, abs(w1).hi));
    n = Interval(std::max(n.lo, abs(w2).lo), std::max(n.hi, abs(w2).hi));
    return n;
}

/// Enclosure of |p . Xi|.
inline Interval dot_err(const IntPoint& p, const Interval& xi) {
    Interval v = Interval(Rat(p.x0)) + xi * Rat(p.x1) + xi * xi * Rat(p.x2);
    return abs(v);
}

/// Trailing-third window hull, inflated by one window spread on each side.
/// The samples converge one-sidedly (the O(1) constants in the estimates
/// only wash out in the limit), so the bare hull would systematically miss
/// the limit; the observed spread is the honest error bar.
inline Interval window_bracket(const std::vector<std::pair<long, Interval>>& samples) {
    size_t n = samples.size();
    size_t window = std::max<size_t>(2, n / 3);
    if (window > n) window = n;
    size_t start = n - window;
    Rat lo = samples[start].second.lo, hi = samples[start].second.hi;
    for (size_t j = start + 1; j < n; ++j) {
        lo = std::min(lo, samples[j].second.lo);
        hi = std::max(hi, samples[j].second.hi);
    }
    Rat spread = hi - lo;
    return {lo - spread, hi + spread};
}

/// Refine xi until q(xi) has certainly-positive, relatively tight values.
template <class F>
Interval certified_quantity(CertReal& xi, F&& f, long max_bits = 1 << 21) {
    long bits = 128;
    Interval v = f(xi.interval());
    while (bits <= max_bits) {
        if (v.lo > 0 && v.width() * 1000 <= v.lo) return v;
        xi.refine_bits(bits);
        v = f(xi.interval());
        bits *= 2;
    }
    return v;  // degraded: caller's brackets just widen
}

struct RatedPoint {
    long i;
    Int norm;
    Interval err;        // the small quantity (wedge norm or dot error)
    Interval log_norm;
    Interval log_err;
};

/// Pareto filter: norm ascending, error certainly decreasing.
inline std::vector<RatedPoint> pareto(std::vector<RatedPoint> pts) {
    std::stable_sort(pts.begin(), pts.end(),
                     [](const RatedPoint& a, const RatedPoint& b) { return a.norm < b.norm; });
    std::vector<RatedPoint> keep;
    for (auto& p : pts) {
        if (!keep.empty() && !(p.err.hi < keep.back().err.lo)) continue;  // dominated or unresolved
        if (!keep.empty() && keep.back().norm == p.norm) continue;
        keep.push_back(std::move(p));
    }
    return keep;
}

inline void ratio_samples(const std::vector<RatedPoint>& pts, bool uniform,
                          ExponentBracket& out) {
    for (size_t j = 0; j + (uniform ? 1 : 0) < pts.size(); ++j) {
        const Interval& den = uniform ? pts[j + 1].log_norm : pts[j].log_norm;
        if (den.lo <= 0) continue;
        out.samples.emplace_back(pts[j].i, (-pts[j].log_err) / den);
    }
    if (out.samples.size() >= 3) {
        out.bracket = window_bracket(out.samples);
        out.valid = true;
    }
}

}  // namespace detail

/// Measured exponents from the ladders of `seq` up to index i_max.
inline ExponentSet empirical_exponents(SturmSeq& seq, long i_max, long precision_bits = 256) {
    ExponentSet set;
    set.i_max = i_max;
    CertReal xi_val = xi(seq, precision_bits);
    const SeqSpec& s = seq.seq();
    long i0 = s.t(2) + 1;
    if (i_max < i0 + 6) throw std::invalid_argument("empirical_exponents: i_max too small");
    long prec = 128;

    // Simultaneous side: the y ladder.
    std::vector<detail::RatedPoint> ypts;
    for (long i = i0; i <= i_max; ++i) {
        detail::RatedPoint p;
        p.i = i;
        IntPoint yp = seq.y_primitive(i);
        p.norm = sup_norm(yp);
        p.err = detail::certified_quantity(
            xi_val, [&yp](const Interval& x) { return detail::wedge_norm(yp, x); });
        if (p.err.lo <= 0) continue;
        p.log_norm = log_interval(p.norm, prec);
        p.log_err = log_interval(p.err, prec);
        ypts.push_back(std::move(p));
    }
    std::vector<detail::RatedPoint> ypar = detail::pareto(ypts);
    detail::ratio_samples(ypar, false, set.lambda2);
    detail::ratio_samples(ypar, true, set.lambda2_hat);
    detail::ratio_samples(ypar, true, set.lambda_check);  // same liminf formula

    // Polynomial side: the z ladder.
    std::vector<detail::RatedPoint> zpts;
    for (long i = i0; i <= i_max; ++i) {
        detail::RatedPoint p;
        p.i = i;
        IntPoint zp = seq.z_primitive(i);
        p.norm = sup_norm(zp);
        p.err = detail::certified_quantity(
            xi_val, [&zp](const Interval& x) { return detail::dot_err(zp, x); });
        if (p.err.lo <= 0) continue;
        p.log_norm = log_interval(p.norm, prec);
        p.log_err = log_interval(p.err, prec);
        zpts.push_back(std::move(p));
    }
    std::vector<detail::RatedPoint> zpar = detail::pareto(zpts);
    detail::ratio_samples(zpar, false, set.omega2);
    detail::ratio_samples(zpar, true, set.omega2_hat);

    // Algebraic-approximation side: near roots of the z polynomials.
    std::vector<detail::RatedPoint> apts;
    for (const QuadApprox& qa : quad_approximants(seq, xi_val, i_max)) {
        detail::RatedPoint p;
        p.i = qa.i;
        p.norm = qa.height;
        CertReal diff = xi_val - qa.root_near;
        Interval e = abs(diff.interval());
        long bits = 256;
        while (bits <= (1L << 21) && !(e.lo > 0 && e.width() * 1000 <= e.lo)) {
            diff.refine_bits(bits);
            e = abs(diff.interval());
            bits *= 2;
        }
        if (e.lo <= 0) continue;
        p.err = e * Rat(qa.height);
        p.log_norm = log_interval(p.norm, prec);
        p.log_err = log_interval(p.err, prec);
        apts.push_back(std::move(p));
    }
    std::vector<detail::RatedPoint> apar = detail::pareto(apts);
    detail::ratio_samples(apar, false, set.omega2_star);
    detail::ratio_samples(apar, true, set.omega2_star_hat);

    if (set.lambda_check.valid && set.lambda_check.bracket.lo > make_rat(1, 2)) {
        set.beta0 = Interval(Rat(1) / set.lambda_check.bracket.hi,
                             Rat(1) / set.lambda_check.bracket.lo);
    }
    return set;
}

/// h(sigma) = sigma/2 + 1 - sqrt((sigma/2)^2 + 1).
inline CertReal h_sigma(const CertReal& sigma) {
    CertReal half = sigma / Rat(2);
    return half + Rat(1) - sqrt_cert(half * half + Rat(1));
}

struct PredictedExponents {
    CertReal omega2_hat;   // also omega2_star_hat
    CertReal lambda2_hat;
    std::optional<CertReal> omega2;  // also omega2_star; absent when sigma reaches 0
    CertReal lambda2_lo, lambda2_hi;
    std::optional<CertReal> lambda2;       // pinned iff delta <= h(sigma)
    std::optional<CertReal> lambda_check;  // pinned iff delta < h(sigma)
    CertReal h;
};

inline PredictedExponents predicted_exponents(CertReal sigma, CertReal delta) {
    sigma.refine_bits(96);
    delta.refine_bits(96);
    // Validity: 0 <= delta <= sigma/(1+sigma), sigma in [0, 1/gamma].
    CertReal bound = sigma / (sigma + Rat(1));
    if (delta.hi() < 0 || delta.lo() > bound.hi())
        throw std::domain_error("predicted_exponents: delta outside [0, sigma/(1+sigma)]");
    CertReal gamma_inv = (sqrt_cert(Rat(5)) - Rat(1)) / Rat(2);
    if (sigma.lo() > gamma_inv.hi() || sigma.hi() < 0)
        throw std::domain_error("predicted_exponents: sigma outside [0, 1/gamma]");

    PredictedExponents out;
    out.h = h_sigma(sigma);
    CertReal one(Rat(1));
    CertReal core = (one - delta) * (one + sigma);
    out.omega2_hat = core + Rat(1);
    out.lambda2_hat = core / out.omega2_hat;
    if (sigma.lo() > 0)
        out.omega2 = (CertReal(Rat(2)) - delta) / sigma + one - delta;
    out.lambda2_lo = one - delta;
    CertReal alt = one / (one - delta + sigma);
    // upper bound max(1-delta, 1/(1-delta+sigma)) as an interval hull
    out.lambda2_hi = CertReal(Interval(std::max(out.lambda2_lo.lo(), alt.lo()),
                                       std::max(out.lambda2_lo.hi(), alt.hi())));
    CertReal h = out.h;
    if (delta.hi() <= h.lo()) {
        out.lambda2 = one - delta;
        if (delta.hi() < h.lo()) out.lambda_check = core / (sigma + Rat(2));
    }
    return out;
}

}  // namespace sturmlab
