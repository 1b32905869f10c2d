#pragma once

// Exact successive minima of the two convex-body families
//   C(e^q)  = { ||x|| <= 1,  |x.Xi|    <= e^-q }   (primal, G_q)
//   C*(e^q) = { ||x|| <= e^q, ||x^Xi|| <= 1    }   (dual,   F_q)
// over Z^3 \ {0}, sup norms throughout, Xi = (1, xi, xi^2).
//
// lambda_1 and lambda_2 come from Fincke-Pohst enumeration over a rational
// Euclidean surrogate (radius certified by explicit slack), with the exact
// sup-norm objective minimized convexly along each visited lattice line.
// lambda_3's enumeration volume explodes near the minima crossings, so it
// goes through the cross-product transference: x outside the plane of
// (v1, v2) maps to u = v1 ^ x on the other body with a certified small
// radius, and u determines x up to the cheap line {z : v1 ^ z = u}.
//
// All comparisons are certified interval comparisons that refine xi and
// the e^q enclosure on demand; exhaustion raises PrecisionExhausted with
// both candidates, as the contract requires.

#include <algorithm>
#include <optional>
#include <vector>

#include "sturmlab/interval.hpp"
#include "sturmlab/lattice.hpp"

namespace sturmlab {

class PrecisionExhausted : public std::runtime_error {
  public:
    PrecisionExhausted(const std::string& msg, Vec3 a, Vec3 b)
        : std::runtime_error(msg), first(std::move(a)), second(std::move(b)) {}
    Vec3 first, second;
};

struct Minimum {
    Vec3 point;
    Interval value;      // lambda_j(q)
    Interval log_value;  // L_j(q)
};

struct SuccessiveMinima {
    Rat q;
    std::array<Minimum, 3> primal;
    std::array<Minimum, 3> dual;
};

class MinimaContext {
  public:
    MinimaContext(CertReal xi_value, Rat q, long max_bits = 1 << 22)
        : xi_(std::move(xi_value)), q_(std::move(q)), max_bits_(max_bits) {
        prec_ = 128;
        rebuild();
    }

    const Rat& q() const { return q_; }
    const Interval& expq() const { return expq_; }
    const Interval& xi_interval() const { return xi_.interval(); }
    CertReal& xi() { return xi_; }

    void refine() {
        if (prec_ >= max_bits_) throw std::runtime_error("MinimaContext: precision cap reached");
        prec_ *= 2;
        rebuild();
    }

    /// G_q(x) = max(||x||, e^q |x.Xi|).
    Interval primal_value(const Vec3& x) const {
        Interval err = expq_ * abs(dot_xi(x));
        Rat n = Rat(sup_norm(x));
        return {std::max(n, err.lo), std::max(n, err.hi)};
    }

    /// F_q(x) = max(||x ^ Xi||, e^-q ||x||).
    Interval dual_value(const Vec3& x) const {
        Interval w = wedge_norm_xi(x);
        Interval n = Interval(Rat(sup_norm(x))) / expq_;
        return {std::max(w.lo, n.lo), std::max(w.hi, n.hi)};
    }

    Interval value(const Vec3& x, bool dual) const { return dual ? dual_value(x) : primal_value(x); }

    Interval dot_xi(const Vec3& x) const {
        const Interval& t = xi_.interval();
        return Interval(Rat(x.x0)) + t * Rat(x.x1) + t * t * Rat(x.x2);
    }

    Interval wedge_norm_xi(const Vec3& x) const {
        const Interval& t = xi_.interval();
        Interval t2 = t * t;
        Interval w0 = t2 * Rat(x.x1) - t * Rat(x.x2);
        Interval w1 = Interval(Rat(x.x2)) - t2 * Rat(x.x0);
        Interval w2 = t * Rat(x.x0) - Interval(Rat(x.x1));
        Interval a0 = abs(w0), a1 = abs(w1), a2 = abs(w2);
        return {std::max(a0.lo, std::max(a1.lo, a2.lo)), std::max(a0.hi, std::max(a1.hi, a2.hi))};
    }

    /// Euclidean surrogate for the primal body: G <= t implies Q <= 4.02 t^2.
    QForm3 primal_form() const {
        QForm3 f{};
        Rat e = expq_.hi;
        std::array<Rat, 3> v{Rat(1), xhat_, xhat_ * xhat_};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                f.g[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    (i == j ? Rat(1) : Rat(0)) + e * e * v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
        return f;
    }

    /// Euclidean surrogate for the dual body: F <= t implies Q* <= 6.1 t^2.
    QForm3 dual_form() const {
        QForm3 f{};
        std::array<Rat, 3> v{Rat(1), xhat_, xhat_ * xhat_};
        Rat n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        Rat inv_e = Rat(1) / expq_.lo;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                f.g[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    (i == j ? n2 + inv_e * inv_e : Rat(0)) - v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
        return f;
    }

    Rat primal_radius2(const Rat& t) const { return t * t * make_rat(402, 100); }
    Rat dual_radius2(const Rat& t) const { return t * t * make_rat(610, 100); }

  private:
    void rebuild() {
        expq_ = exp_interval(q_, prec_);
        // Slack guarantee: the surrogate built from midpoints stays within
        // a (1 + 2^-16) factor of the true constraint, so the 4.02 / 6.1
        // radii over-cover. Require e^q * (component error of Xi-hat) tiny.
        Rat target = pow2(-40) / std::max(Rat(1), expq_.hi);
        xi_.refine_to_width(target, max_bits_);
        if (xi_.width() > target)
            throw std::runtime_error("MinimaContext: xi enclosure too wide for this q");
        xhat_ = xi_.mid();
    }

    CertReal xi_;
    Rat q_;
    long max_bits_;
    long prec_;
    Interval expq_;
    Rat xhat_;
};

namespace detail {

/// Certified three-way comparison of objective values; 0 means exactly
/// equal (both dominated by equal integer norms, or identical points).
inline int compare_points(MinimaContext& ctx, const Vec3& a, const Vec3& b, bool dual) {
    if (a == b || a == -b) return 0;
    for (int attempt = 0; attempt < 24; ++attempt) {
        Interval va = ctx.value(a, dual), vb = ctx.value(b, dual);
        if (va.hi < vb.lo) return -1;
        if (vb.hi < va.lo) return 1;
        if (!dual) {
            // integer-norm domination: exact tie detection
            Rat na = Rat(sup_norm(a)), nb = Rat(sup_norm(b));
            Interval ea = ctx.expq() * abs(ctx.dot_xi(a));
            Interval eb = ctx.expq() * abs(ctx.dot_xi(b));
            if (ea.hi < na && eb.hi < nb && na == nb) return 0;
            if (ea.hi < na && eb.hi < nb) return na < nb ? -1 : 1;
        }
        ctx.refine();
    }
    throw PrecisionExhausted("successive minima: cannot separate two candidates", a, b);
}

struct LineExclusions {
    bool skip_line = false;
    std::vector<Int> banned;  // banned c values (zero vector, collinear point, ...)
};

/// c values on {origin + c dir} to exclude: the zero vector and, when
/// `avoid` is given, the possible collinear-with-avoid point.
inline LineExclusions line_exclusions(const Vec3& origin, const Vec3& dir,
                                      const std::optional<Vec3>& avoid) {
    LineExclusions ex;
    auto affine_root = [](const Int& o, const Int& d) -> std::optional<Rat> {
        // root of o + c d = 0
        if (d == 0) return std::nullopt;  // constant
        return make_rat(-o, d);
    };
    // zero vector: o + c d = 0 componentwise
    {
        bool possible = true;
        std::optional<Rat> root;
        for (auto [o, d] : {std::pair{origin.x0, dir.x0}, {origin.x1, dir.x1}, {origin.x2, dir.x2}}) {
            if (d == 0) {
                if (o != 0) possible = false;
            } else {
                Rat r = make_rat(-o, d);
                if (root && *root != r) possible = false;
                root = r;
            }
        }
        if (possible && root && is_integer(*root)) ex.banned.push_back(num(*root));
        if (possible && !root) ex.skip_line = true;  // dir = 0: degenerate, skip
    }
    if (avoid) {
        // cross(origin + c dir, avoid) = 0: three affine equations in c
        Vec3 c0 = cross(origin, *avoid);
        Vec3 c1 = cross(dir, *avoid);
        bool possible = true;
        std::optional<Rat> root;
        for (auto [o, d] : {std::pair{c0.x0, c1.x0}, {c0.x1, c1.x1}, {c0.x2, c1.x2}}) {
            if (d == 0) {
                if (o != 0) possible = false;
            } else {
                Rat r = make_rat(-o, d);
                if (root && *root != r) possible = false;
                root = r;
            }
        }
        if (possible && !root) ex.skip_line = true;  // whole line collinear with avoid
        else if (possible && root && is_integer(*root)) ex.banned.push_back(num(*root));
    }
    return ex;
}

inline Vec3 at(const Vec3& origin, const Vec3& dir, const Int& c) {
    return {origin.x0 + c * dir.x0, origin.x1 + c * dir.x1, origin.x2 + c * dir.x2};
}

/// Convex minimization of the exact objective along a lattice line, with a
/// short ban list. Returns the best allowed point, if any.
inline std::optional<Vec3> line_minimum(MinimaContext& ctx, const Vec3& origin, const Vec3& dir,
                                        Int lo, Int hi, bool dual,
                                        const std::vector<Int>& banned) {
    if (lo > hi) return std::nullopt;
    auto is_banned = [&banned](const Int& c) {
        return std::find(banned.begin(), banned.end(), c) != banned.end();
    };
    // binary search on the discrete slope; plateaus resolve leftward
    Int a = lo, b = hi;
    while (b - a > 1) {
        Int m = floor_div(a + b, 2);
        int cmp = compare_points(ctx, at(origin, dir, m + 1), at(origin, dir, m), dual);
        if (cmp < 0)
            a = m + 1;
        else
            b = m;
    }
    // candidates: the two bracketing points plus neighbors stepping over bans
    std::optional<Vec3> best;
    auto consider = [&](Int c, int direction) {
        while (c >= lo && c <= hi && is_banned(c)) c += direction;
        if (c < lo || c > hi) return;
        Vec3 p = at(origin, dir, c);
        if (!best) {
            best = p;
            return;
        }
        if (compare_points(ctx, p, *best, dual) < 0) best = p;
    };
    consider(a, -1);
    consider(a, +1);
    consider(b, -1);
    consider(b, +1);
    return best;
}

/// Integer basis of the rank-2 lattice { u in Z^3 : u . v = 0 } for
/// primitive v; complete because |u1 ^ u2| = |v|.
inline std::array<Vec3, 2> kernel_basis(const Vec3& v) {
    Int p = v.x0, q = v.x1, r = v.x2;
    if (p == 0 && q == 0) return {Vec3{1, 0, 0}, Vec3{0, 1, 0}};
    Int g, a, b;
    mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    // u1 = (q/g, -p/g, 0), u2 = (-r a, -r b, g): u1 ^ u2 = -v
    return {Vec3{q / g, -p / g, 0}, Vec3{-r * a, -r * b, g}};
}

/// Integer solutions of v ^ z = u (v primitive, u . v = 0): either empty or
/// a line z0 + Z v. Solves T v = -(u ^ v) (mod s), s = v . v.
inline std::optional<Vec3> cross_line_origin(const Vec3& v, const Vec3& u) {
    Int s = v.x0 * v.x0 + v.x1 * v.x1 + v.x2 * v.x2;
    Vec3 w = cross(u, v);  // z = (w + T v)/s needs T with w + T v = 0 mod s
    // Solve T v_j = -w_j (mod s) for all j, as intersection of progressions.
    Int res = 0, step = 1;
    bool any = false;
    for (auto [vj, wj] : {std::pair{v.x0, w.x0}, {v.x1, w.x1}, {v.x2, w.x2}}) {
        // a T = b (mod s) with a = vj, b = -wj
        Int a = ((vj % s) + s) % s, b = ((-wj) % s + s) % s;
        if (a == 0) {
            if (b % s != 0) return std::nullopt;
            continue;
        }
        Int g = gcd(a, s);
        if (b % g != 0) return std::nullopt;
        Int ai = a / g, bi = b / g, si = s / g;
        Int inv;
        if (si == 1) {
            inv = 0;
        } else if (mpz_invert(inv.get_mpz_t(), ai.get_mpz_t(), si.get_mpz_t()) == 0) {
            return std::nullopt;
        }
        Int t0 = si == 1 ? Int(0) : Int((bi * inv) % si);  // T = t0 (mod si)
        if (!any) {
            res = t0;
            step = si;
            any = true;
        } else {
            // intersect T = res (mod step) with T = t0 (mod si)
            Int g2, x, y;
            mpz_gcdext(g2.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), step.get_mpz_t(), si.get_mpz_t());
            Int diff = t0 - res;
            if (diff % g2 != 0) return std::nullopt;
            Int lcm_step = step / g2 * si;
            Int si_red = si / g2;
            Int shift = si_red == 0 ? Int(0) : Int(((diff / g2 * x) % si_red + si_red) % si_red);
            res = ((res + shift * step) % lcm_step + lcm_step) % lcm_step;
            step = lcm_step;
        }
    }
    Int T = any ? res : Int(0);
    Vec3 numv{w.x0 + T * v.x0, w.x1 + T * v.x1, w.x2 + T * v.x2};
    if (numv.x0 % s != 0 || numv.x1 % s != 0 || numv.x2 % s != 0) return std::nullopt;
    return Vec3{numv.x0 / s, numv.x1 / s, numv.x2 / s};
}

/// List (up to sign) the points a b0 + b b1 of a planar lattice with
/// Q-value at most r2.
inline void enumerate_plane(const QForm3& q, std::array<Vec3, 2> b, const Rat& r2,
                            const std::function<void(const Vec3&)>& emit,
                            long node_budget = 50000000) {
    Rat g11 = q.eval(b[0]), g22 = q.eval(b[1]), g12 = q.pair(b[0], b[1]);
    for (int it = 0; it < 64; ++it) {  // Gauss reduction
        if (g11 > g22) {
            std::swap(b[0], b[1]);
            std::swap(g11, g22);
        }
        Int c = round_rat(g12 / g11);
        if (c == 0) break;
        b[1] = b[1] - scaled(b[0], c);
        g22 = q.eval(b[1]);
        g12 = q.pair(b[0], b[1]);
    }
    if (g11 <= 0 || g22 <= 0) throw std::domain_error("enumerate_plane: degenerate form");
    Rat mu = g12 / g11;
    Rat n2 = g22 - mu * mu * g11;
    long nodes = 0;
    Int b_hi = ceil_sqrt(r2 / n2);
    for (Int cb = 0; cb <= b_hi; ++cb) {
        Rat rem = r2 - n2 * Rat(cb) * Rat(cb);
        if (rem < 0) continue;
        Rat center = -mu * Rat(cb);
        Int span = ceil_sqrt(rem / g11);
        for (Int ca = floor(center) - span; ca <= ceil(center) + span; ++ca) {
            if (cb == 0 && ca <= 0) continue;  // dedupe +-, skip zero
            if (++nodes > node_budget)
                throw std::runtime_error("enumerate_plane: node budget exceeded");
            emit(Vec3{ca * b[0].x0 + cb * b[1].x0, ca * b[0].x1 + cb * b[1].x1,
                      ca * b[0].x2 + cb * b[1].x2});
        }
    }
}

/// Interval upper bound helpers over 2-norms.
inline Rat two_norm_hi(const Vec3& v, long prec = 96) {
    Rat s = Rat(v.x0 * v.x0 + v.x1 * v.x1 + v.x2 * v.x2);
    return sqrt_interval(s, prec).hi;
}

/// Some x with u . x = 1 for primitive u, by two extended gcd steps.
inline Vec3 unit_dot_solution(const Vec3& u) {
    Int g1, a, b;
    mpz_gcdext(g1.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), u.x0.get_mpz_t(), u.x1.get_mpz_t());
    Int g2, c, d;
    mpz_gcdext(g2.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t(), g1.get_mpz_t(), u.x2.get_mpz_t());
    if (abs(g2) != 1) throw std::domain_error("unit_dot_solution: u not primitive");
    // c*(a u0 + b u1) + d u2 = g2 = +-1
    Vec3 x{c * a * g2, c * b * g2, d * g2};  // times g2 fixes the sign to +1
    return x;
}

}  // namespace detail

struct MinimaOptions {
    std::vector<Vec3> pool;  // warm-start candidates (trajectory points etc.)
    long node_budget = 50000000;
};

/// Exact successive minima of both bodies at parameter q.
inline SuccessiveMinima successive_minima(MinimaContext& ctx, const MinimaOptions& opt = {}) {
    SuccessiveMinima out;
    out.q = ctx.q();

    auto normalize = [](Vec3 p) {
        Int c = content(p);
        p = Vec3{p.x0 / c, p.x1 / c, p.x2 / c};
        return p;
    };

    for (int side = 0; side < 2; ++side) {
        bool dual = side == 1;
        QForm3 form = dual ? ctx.dual_form() : ctx.primal_form();
        std::array<Vec3, 3> basis = lll_reduce(form);

        std::vector<Vec3> seeds;
        for (const Vec3& b : basis) seeds.push_back(b);
        for (const Vec3& p : opt.pool)
            if (!p.is_zero()) seeds.push_back(p);

        auto better = [&](std::optional<Vec3>& best, const Vec3& p) {
            if (p.is_zero()) return;
            if (!best) {
                best = p;
                return;
            }
            if (detail::compare_points(ctx, p, *best, dual) < 0) best = p;
        };

        // ---- rank 1 ----
        std::optional<Vec3> v1;
        for (const Vec3& p : seeds) better(v1, p);
        {
            Rat t = ctx.value(*v1, dual).hi;
            Rat r2 = dual ? ctx.dual_radius2(t) : ctx.primal_radius2(t);
            enumerate_lines(form, basis, r2, [&](const LineVisit& lv) {
                detail::LineExclusions ex = detail::line_exclusions(lv.origin, lv.dir, std::nullopt);
                if (ex.skip_line) return;
                if (auto cand = detail::line_minimum(ctx, lv.origin, lv.dir, lv.c1_lo, lv.c1_hi,
                                                     dual, ex.banned))
                    better(v1, *cand);
            }, opt.node_budget);
        }
        Vec3 m1 = normalize(*v1);

        // ---- rank 2 ----
        std::optional<Vec3> v2;
        for (const Vec3& p : seeds)
            if (!proportional(p, m1)) better(v2, p);
        {
            Rat t = ctx.value(*v2, dual).hi;
            Rat r2 = dual ? ctx.dual_radius2(t) : ctx.primal_radius2(t);
            enumerate_lines(form, basis, r2, [&](const LineVisit& lv) {
                detail::LineExclusions ex = detail::line_exclusions(lv.origin, lv.dir, m1);
                if (ex.skip_line) return;
                if (auto cand = detail::line_minimum(ctx, lv.origin, lv.dir, lv.c1_lo, lv.c1_hi,
                                                     dual, ex.banned))
                    better(v2, *cand);
            }, opt.node_budget);
        }
        Vec3 m2 = normalize(*v2);

        // ---- rank 3: nested convex descent over a completed basis ----
        // Every x outside the plane of (m1, m2) is x = b x_T + a m2 + c m1
        // with b = x . u0 != 0, u0 = m1 ^ m2 primitive ((m1, m2) is a basis
        // of the saturated plane lattice). G is convex in (b, a, c); |b| is
        // Minkowski-bounded, so exhaust b and run exact convex descents in
        // a and c. Sign symmetry lets b > 0 suffice.
        std::optional<Vec3> v3;
        for (const Vec3& p : seeds)
            if (det3(p, m1, m2) != 0) better(v3, p);
        {
            Vec3 u0 = cross(m1, m2);
            if (content(u0) != 1)
                throw std::logic_error("successive_minima: v1 ^ v2 not primitive");
            Vec3 xt = detail::unit_dot_solution(u0);
            // size-reduce the completion against the plane basis
            for (int pass = 0; pass < 4; ++pass) {
                for (const Vec3& w : {m1, m2}) {
                    Rat num = form.pair(xt, w), den = form.eval(w);
                    Int c = detail::round_rat(num / den);
                    if (c != 0) xt = xt - detail::scaled(w, c);
                }
            }

            auto point_at = [&](const Int& b, const Int& a, const Int& c) {
                return Vec3{b * xt.x0 + a * m2.x0 + c * m1.x0, b * xt.x1 + a * m2.x1 + c * m1.x1,
                            b * xt.x2 + a * m2.x2 + c * m1.x2};
            };

            // c-descent at fixed (b, a): convex in c, start at the surrogate argmin.
            auto slice_min = [&](const Int& b, const Int& a) {
                Vec3 p0 = point_at(b, a, 0);
                Rat qc = form.eval(m1);
                Rat ql = form.pair(p0, m1);
                Int c = detail::round_rat(-ql / qc);
                auto f = [&](const Int& cc) { return point_at(b, a, cc); };
                // exponential + binary descent from c
                auto cmp = [&](const Int& x, const Int& y) {
                    return detail::compare_points(ctx, f(x), f(y), dual);
                };
                int dir = 0;
                if (cmp(c + 1, c) < 0)
                    dir = 1;
                else if (cmp(c - 1, c) < 0)
                    dir = -1;
                if (dir != 0) {
                    Int step = 1;
                    while (cmp(c + dir * (step * 2), c + dir * step) < 0) step *= 2;
                    // min in [c + dir*step/??]: binary on the bracket [c, c + 2*dir*step]
                    Int lo = c, hi = c + dir * step * 2;
                    if (dir < 0) std::swap(lo, hi);
                    while (hi - lo > 1) {
                        Int m = floor_div(lo + hi, 2);
                        if (cmp(m + 1, m) < 0)
                            lo = m + 1;
                        else
                            hi = m;
                    }
                    c = (cmp(hi, lo) < 0) ? hi : lo;
                }
                return f(c);
            };

            // a-descent at fixed b: phi_b(a) = value(slice_min(b, a)) is convex.
            auto fiber_min = [&](const Int& b) {
                // surrogate argmin over real (a, c): solve the 2x2 SPD system
                Vec3 pb = detail::scaled(xt, b);
                Rat g22 = form.eval(m2), g11 = form.eval(m1), g21 = form.pair(m2, m1);
                Rat r2v = form.pair(pb, m2), r1v = form.pair(pb, m1);
                Rat det = g22 * g11 - g21 * g21;
                Int a = detail::round_rat(Rat((-r2v * g11 + r1v * g21) / det));
                auto fa = [&](const Int& aa) { return slice_min(b, aa); };
                auto cmp = [&](const Int& x, const Int& y) {
                    return detail::compare_points(ctx, fa(x), fa(y), dual);
                };
                int dir = 0;
                if (cmp(a + 1, a) < 0)
                    dir = 1;
                else if (cmp(a - 1, a) < 0)
                    dir = -1;
                if (dir != 0) {
                    Int step = 1;
                    while (cmp(a + dir * (step * 2), a + dir * step) < 0) step *= 2;
                    Int lo = a, hi = a + dir * step * 2;
                    if (dir < 0) std::swap(lo, hi);
                    while (hi - lo > 1) {
                        Int m = floor_div(lo + hi, 2);
                        if (cmp(m + 1, m) < 0)
                            lo = m + 1;
                        else
                            hi = m;
                    }
                    a = (cmp(hi, lo) < 0) ? hi : lo;
                }
                return fa(a);
            };

            // b loop with a certified stopping bound: any x with x . u0 = b has
            // value >= |b| / K, so stop once that exceeds the incumbent.
            Rat K;
            if (!dual) {
                K = Rat(3) * Rat(sup_norm(u0));
            } else {
                // |b| <= F(x) * (sqrt3 e^q |Xi.u0| / |Xi|^2 + 3 sqrt3 |u0| / |Xi|)
                Rat sqrt3 = sqrt_interval(Rat(3)).hi;
                Interval xiu = abs(ctx.dot_xi(u0));
                Rat xi_hi = std::max(abs(Rat(ctx.xi_interval().lo)), abs(Rat(ctx.xi_interval().hi)));
                Rat nxi2_lo(1);  // ||Xi||_2^2 >= 1
                K = sqrt3 * ctx.expq().hi * xiu.hi / nxi2_lo + Rat(3) * sqrt3 * Rat(sup_norm(u0));
            }
            for (Int b = 1;; ++b) {
                Rat ub = ctx.value(*v3, dual).hi;
                if (Rat(b) > K * ub) break;
                better(v3, fiber_min(b));
            }
        }
        Vec3 m3 = normalize(*v3);

        auto fill = [&](Minimum& m, const Vec3& p) {
            m.point = p;
            long prec = 128;
            m.value = ctx.value(p, dual);
            while (prec <= (1 << 18) && !(m.value.lo > 0 && m.value.width() * 1000000 <= m.value.lo)) {
                ctx.refine();
                m.value = ctx.value(p, dual);
                prec *= 2;
            }
            m.log_value = log_interval(m.value, 96);
        };
        auto& side_out = dual ? out.dual : out.primal;
        fill(side_out[0], m1);
        fill(side_out[1], m2);
        fill(side_out[2], m3);
    }
    return out;
}

}  // namespace sturmlab
