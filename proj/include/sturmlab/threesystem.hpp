#pragma once

// The explicit piecewise-linear model P = (P1, P2, P3) of the successive
// minima map, built from exact rational surrogates of the growth data:
// W_k = e^{beta p_k}, Y_i = W_k^{l+1} W_{k-1}, Z_i = W_k^l W_{k-1},
//   delta_i = min(delta, 1 - log max(Z_{t_{k+1}}, Z_i)/log Y_i),
//   q_i = (2 - delta_i) log Y_i,   c_i = q_i + log W_k,
//   D_i* = Y_i^{delta_i - 1},      D_i = D_i*/W_k,
//   hL_i(q) = max(log Z_i, log D_i + q),
//   hL_i*(q) = max(log D_i*, log Y_i - q),
// and on (c_{i-1}, c_i] with t_k <= i < t_{k+1}:
//   P(q) = sort(hL_{t_{k+1}}(q), -hL_i*(q), hL_i(q)).
// I_i = [a_i, b_i] is where P3 = -hL_i*; I_i' = [b_i, a_{i+1}] covers the
// breakpoint c_i and degenerates to {c_i} when delta_i = 0.
//
// Everything here is exact rational arithmetic in the chosen (beta, delta)
// midpoints; the model's uncertainty is inherited from the growth report
// and reported alongside, not hidden in the evaluator.

#include <algorithm>
#include <optional>
#include <vector>

#include "sturmlab/growth.hpp"
#include "sturmlab/minima.hpp"
#include "sturmlab/sturm.hpp"

namespace sturmlab {

struct ThreeSystemRung {
    long i = 0, k = 0, ell = 0;
    Rat log_Y, log_Z, log_Znext;  // log Z_{t_{k+1}}
    Rat delta_i;
    Rat log_D, log_Dstar;
    Rat q_i, c_i;     // kink and block end
    Rat a_i, b_i;     // I_i = [a_i, b_i]
};

class ThreeSystem {
  public:
    ThreeSystem(SeqSpec s, Rat beta, Rat delta, long i_max) : s_(std::move(s)), beta_(beta), delta_(delta) {
        if (i_max < s_.t(2) + 2) throw std::invalid_argument("ThreeSystem: i_max too small");
        std::vector<Int> p = s_.p_seq(s_.block(i_max + 1).first + 2);
        auto logW = [&](long k) { return beta_ * Rat(p[static_cast<size_t>(k + 1)]); };
        for (long i = s_.t(1); i <= i_max; ++i) {
            auto [k, ell] = s_.block(i);
            if (k < 1) continue;
            ThreeSystemRung r;
            r.i = i;
            r.k = k;
            r.ell = ell;
            r.log_Y = Rat(logW(k) * Rat(ell + 1) + logW(k - 1));
            r.log_Z = Rat(logW(k) * Rat(ell) + logW(k - 1));
            r.log_Znext = logW(k);  // Z_{t_{k+1}} = W_k
            Rat cap = Rat(1) - Rat(std::max(r.log_Znext, r.log_Z) / r.log_Y);
            r.delta_i = std::min(delta_, cap);
            r.q_i = Rat((Rat(2) - r.delta_i) * r.log_Y);
            r.c_i = Rat(r.q_i + logW(k));
            r.log_Dstar = Rat((r.delta_i - Rat(1)) * r.log_Y);
            r.log_D = Rat(r.log_Dstar - logW(k));
            r.a_i = Rat(r.log_Y + r.log_Z);
            r.b_i = Rat(r.c_i - r.delta_i * r.log_Y);
            rungs_.push_back(std::move(r));
        }
        // Keep only rungs whose top curve hL_{t_{k+1}} is itself built.
        while (!rungs_.empty() && s_.t(rungs_.back().k + 1) > i_max) rungs_.pop_back();
        if (rungs_.size() < 3) throw std::invalid_argument("ThreeSystem: too few rungs");
    }

    const std::vector<ThreeSystemRung>& rungs() const { return rungs_; }
    Rat q_min() const { return rungs_.front().c_i; }
    Rat q_max() const { return rungs_[rungs_.size() - 2].c_i; }

    /// The rung whose interval (c_{i-1}, c_i] contains q.
    const ThreeSystemRung& rung_at(const Rat& q) const {
        for (size_t j = 1; j < rungs_.size(); ++j)
            if (q <= rungs_[j].c_i && q > rungs_[j - 1].c_i) return rungs_[j];
        throw std::out_of_range("ThreeSystem: q outside the built range");
    }

    /// hL_i(q); needs the rung for index i.
    static Rat hL(const ThreeSystemRung& r, const Rat& q) { return std::max(r.log_Z, Rat(r.log_D + q)); }
    static Rat hL_star(const ThreeSystemRung& r, const Rat& q) {
        return std::max(r.log_Dstar, Rat(r.log_Y - q));
    }

    std::array<Rat, 3> eval(const Rat& q) const {
        const ThreeSystemRung& r = rung_at(q);
        const ThreeSystemRung& top = rung_for_index(s_.t(r.k + 1));
        std::array<Rat, 3> v{hL(top, q), -hL_star(r, q), hL(r, q)};
        std::sort(v.begin(), v.end());
        return v;
    }

    enum class Zone { I, Iprime };

    /// Zone of q: inside I_i, or inside some I_i' = [b_i, a_{i+1}].
    Zone zone(const Rat& q) const {
        const ThreeSystemRung& r = rung_at(q);
        if (q >= r.a_i && q <= r.b_i) return Zone::I;
        return Zone::Iprime;
    }

    const ThreeSystemRung& rung_for_index(long i) const {
        long lo = rungs_.front().i;
        if (i < lo || i > rungs_.back().i)
            throw std::out_of_range("ThreeSystem: rung index outside range");
        return rungs_[static_cast<size_t>(i - lo)];
    }

    const Rat& beta() const { return beta_; }
    const Rat& delta() const { return delta_; }

  private:
    SeqSpec s_;
    Rat beta_, delta_;
    std::vector<ThreeSystemRung> rungs_;
};

/// Model from a sequence's measured growth (bracket midpoints).
inline ThreeSystem three_system(SturmSeq& seq, long i_max, long k_growth = 16) {
    GrowthReport g = growth(seq, k_growth);
    Rat delta_mid = std::max(Rat(0), g.delta.mid());
    return ThreeSystem(seq.seq(), g.beta.mid(), delta_mid, i_max);
}

struct CompareRow {
    Rat q;
    std::array<Rat, 3> P;
    std::array<Interval, 3> L;
    std::array<Interval, 3> L_dual;
    ThreeSystem::Zone zone;
    Rat max_dev_over_q;       // I zones: max_j |L_j - P_j|/q (worst case over bracket)
    bool sandwich_ok = true;  // I' zones
};

struct CompareReport {
    std::vector<CompareRow> rows;
    Rat max_dev_I_top;        // max over I-zone rows in the top half of the range
    Rat minkowski_max_abs;    // max |L1+L2+L3 - q|
    Rat mahler_max_abs;       // max_j |L_j + L*_{4-j}|
    bool sandwich_all_ok = true;
};

/// Grid comparison L vs P; grid includes all breakpoints q_i, c_i and the
/// midpoints of every I_i and I_i' inside [q_lo, q_hi], plus a uniform fill.
inline std::vector<Rat> comparison_grid(const ThreeSystem& ts, const Rat& q_lo, const Rat& q_hi,
                                        long n_uniform) {
    std::vector<Rat> grid;
    for (long j = 0; j < n_uniform; ++j)
        grid.push_back(q_lo + (q_hi - q_lo) * Rat(j) / Rat(std::max(1L, n_uniform - 1)));
    for (const auto& r : ts.rungs()) {
        for (const Rat& q : {r.q_i, r.c_i, Rat((r.a_i + r.b_i) / 2)}) {
            if (q >= q_lo && q <= q_hi) grid.push_back(q);
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

/// Trajectory pool for warm-starting the minima search: the primitive
/// ladder points with norms up to roughly e^{q_hi}.
inline std::vector<Vec3> trajectory_pool(SturmSeq& seq, const Rat& q_hi, long i_cap = 400) {
    std::vector<Vec3> pool;
    Interval cap = exp_interval(q_hi * make_rat(6, 5) + Rat(8), 64);
    for (long i = seq.seq().t(1) + 1; i <= i_cap; ++i) {
        IntPoint y = seq.y_primitive(i);
        IntPoint z = seq.z_primitive(i);
        pool.push_back(z);
        pool.push_back(y);
        if (Rat(sup_norm(y)) > cap.hi) break;
    }
    return pool;
}

inline CompareRow compare_at(MinimaContext& ctx, const ThreeSystem& ts,
                             const SuccessiveMinima& sm, Rat tol_over_q = make_rat(5, 100)) {
    CompareRow row;
    row.q = sm.q;
    row.P = ts.eval(sm.q);
    for (int j = 0; j < 3; ++j) {
        row.L[static_cast<size_t>(j)] = sm.primal[static_cast<size_t>(j)].log_value;
        row.L_dual[static_cast<size_t>(j)] = sm.dual[static_cast<size_t>(j)].log_value;
    }
    row.zone = ts.zone(sm.q);
    if (row.zone == ThreeSystem::Zone::I) {
        Rat worst(0);
        for (int j = 0; j < 3; ++j) {
            const Interval& L = row.L[static_cast<size_t>(j)];
            const Rat& P = row.P[static_cast<size_t>(j)];
            Rat dev = std::max(abs(Rat(L.lo - P)), abs(Rat(L.hi - P)));
            worst = std::max(worst, dev);
        }
        row.max_dev_over_q = worst / sm.q;
    } else {
        // sandwich: P2 <= L2 + tol q, L2 <= (P2+P3)/2 + tol q,
        //           (P2+P3)/2 <= L3 + tol q, L3 <= P3 + tol q
        Rat tol = tol_over_q * sm.q;
        const Rat& P2 = row.P[1];
        const Rat& P3 = row.P[2];
        Rat mid = (P2 + P3) / 2;
        const Interval& L2 = row.L[1];
        const Interval& L3 = row.L[2];
        row.sandwich_ok = P2 <= L2.hi + tol && L2.lo <= mid + tol && mid <= L3.hi + tol &&
                          L3.lo <= P3 + tol;
        row.max_dev_over_q = Rat(0);
    }
    return row;
}

struct MinimaProfile {
    std::vector<SuccessiveMinima> rows;
};

/// Exact minima over a q grid. One context per grid point; the pool feeds
/// every search with the relevant trajectory points.
inline MinimaProfile minima_profile(CertReal xi_value, const std::vector<Rat>& grid,
                                    const std::vector<Vec3>& pool) {
    MinimaProfile prof;
    for (const Rat& q : grid) {
        MinimaContext ctx(xi_value, q);
        MinimaOptions opt;
        opt.pool = pool;
        prof.rows.push_back(successive_minima(ctx, opt));
    }
    return prof;
}

struct ParametricExponents {
    Interval psi1_lo, psi1_hi;  // liminf/limsup of L1/q
    Interval psi2_hi;           // limsup of L2/q
    Interval psi3_lo, psi3_hi;
    // dictionary translations
    Interval omega2, omega2_hat, lambda2, lambda2_hat;
};

/// Trailing-half brackets of L_j/q and the dictionary translation
///   (psi1_lo, psi1_hi, psi3_lo, psi3_hi)
///     = (1/(omega2+1), 1/(homega2+1), hlambda2/(hlambda2+1), lambda2/(lambda2+1)).
inline ParametricExponents parametric_exponents(const MinimaProfile& prof) {
    if (prof.rows.size() < 6)
        throw std::invalid_argument("parametric_exponents: profile too short");
    size_t start = prof.rows.size() / 2;
    auto bracket = [&](int j, bool maximum) {
        Rat lo, hi;
        bool first = true;
        for (size_t r = start; r < prof.rows.size(); ++r) {
            Interval ratio = prof.rows[r].primal[static_cast<size_t>(j)].log_value / prof.rows[r].q;
            if (first) {
                lo = ratio.lo;
                hi = ratio.hi;
                first = false;
            } else if (maximum) {
                lo = std::max(lo, ratio.lo);
                hi = std::max(hi, ratio.hi);
            } else {
                lo = std::min(lo, ratio.lo);
                hi = std::min(hi, ratio.hi);
            }
        }
        // inflate by the observed half-spread of the ratio samples
        Rat smin, smax;
        first = true;
        for (size_t r = start; r < prof.rows.size(); ++r) {
            Interval ratio = prof.rows[r].primal[static_cast<size_t>(j)].log_value / prof.rows[r].q;
            if (first) {
                smin = ratio.lo;
                smax = ratio.hi;
                first = false;
            } else {
                smin = std::min(smin, ratio.lo);
                smax = std::max(smax, ratio.hi);
            }
        }
        Rat pad = (smax - smin) / 2;
        return Interval(lo - pad, hi + pad);
    };
    ParametricExponents out;
    out.psi1_lo = bracket(0, false);
    out.psi1_hi = bracket(0, true);
    out.psi2_hi = bracket(1, true);
    out.psi3_lo = bracket(2, false);
    out.psi3_hi = bracket(2, true);
    auto inv_minus_one = [](const Interval& v) {
        return Interval(Rat(1) / v.hi - 1, Rat(1) / std::max(v.lo, make_rat(1, 1000000)) - 1);
    };
    auto ratio_to_exp = [](const Interval& v) {
        Rat hi_cap = std::min(v.hi, make_rat(999, 1000));
        Rat lo_cap = std::max(v.lo, Rat(0));
        return Interval(lo_cap / (Rat(1) - lo_cap), hi_cap / (Rat(1) - hi_cap));
    };
    out.omega2 = inv_minus_one(out.psi1_lo);
    out.omega2_hat = inv_minus_one(out.psi1_hi);
    out.lambda2_hat = ratio_to_exp(out.psi3_lo);
    out.lambda2 = ratio_to_exp(out.psi3_hi);
    return out;
}

}  // namespace sturmlab
