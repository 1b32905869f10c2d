#pragma once

// Certified reals: exact rational enclosures plus an optional refinement
// recipe. Transcendental endpoints (log, exp, sqrt) come from MPFR with
// directed rounding, converted back to exact rationals, so every interval
// is a true enclosure.

#include <mpfr.h>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "sturmlab/numeric.hpp"

namespace sturmlab {

struct Interval {
    Rat lo, hi;

    Interval() : lo(0), hi(0) {}
    explicit Interval(const Rat& x) : lo(x), hi(x) {}
    Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool is_point() const { return lo == hi; }

    Interval operator-() const { return {-hi, -lo}; }
    Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
    Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }

    Interval operator*(const Interval& o) const {
        Rat p1 = lo * o.lo, p2 = lo * o.hi, p3 = hi * o.lo, p4 = hi * o.hi;
        return {std::min(std::min(p1, p2), std::min(p3, p4)),
                std::max(std::max(p1, p2), std::max(p3, p4))};
    }

    /// Division by an interval not containing zero.
    Interval operator/(const Interval& o) const {
        if (o.lo <= 0 && 0 <= o.hi) throw std::domain_error("Interval: division by zero-straddling interval");
        return *this * Interval(Rat(1) / o.hi, Rat(1) / o.lo);
    }

    Interval operator+(const Rat& x) const { return {lo + x, hi + x}; }
    Interval operator-(const Rat& x) const { return {lo - x, hi - x}; }
    Interval operator*(const Rat& x) const {
        return x >= 0 ? Interval{lo * x, hi * x} : Interval{hi * x, lo * x};
    }
    Interval operator/(const Rat& x) const {
        if (x == 0) throw std::domain_error("Interval: division by zero");
        return *this * (Rat(1) / x);
    }
};

inline Interval abs(const Interval& v) {
    if (v.lo >= 0) return v;
    if (v.hi <= 0) return -v;
    return {Rat(0), std::max(Rat(-v.lo), v.hi)};
}

inline Interval intersect(const Interval& a, const Interval& b) {
    Rat l = std::max(a.lo, b.lo), h = std::min(a.hi, b.hi);
    if (l > h) throw std::domain_error("intersect: disjoint intervals (inconsistent enclosures)");
    return {l, h};
}

inline Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

inline bool certainly_less(const Interval& a, const Interval& b) { return a.hi < b.lo; }
inline bool certainly_positive(const Interval& a) { return a.lo > 0; }
inline bool certainly_negative(const Interval& a) { return a.hi < 0; }
inline bool overlap(const Interval& a, const Interval& b) {
    return !(a.hi < b.lo || b.hi < a.lo);
}

namespace detail {

class MpfrGuard {
  public:
    explicit MpfrGuard(mpfr_prec_t prec) { mpfr_init2(x_, prec); }
    ~MpfrGuard() { mpfr_clear(x_); }
    MpfrGuard(const MpfrGuard&) = delete;
    MpfrGuard& operator=(const MpfrGuard&) = delete;
    mpfr_ptr get() { return x_; }

  private:
    mpfr_t x_;
};

inline Rat to_rat(mpfr_srcptr x) {
    Rat q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
}

}  // namespace detail

/// Enclosure of log(x) for rational x > 0 at roughly `prec` bits.
inline Interval log_interval(const Rat& x, long prec = 96) {
    if (x <= 0) throw std::domain_error("log_interval: nonpositive argument");
    detail::MpfrGuard lo(prec), hi(prec);
    mpfr_set_q(lo.get(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_set_q(hi.get(), x.get_mpq_t(), MPFR_RNDU);
    mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
    return {detail::to_rat(lo.get()), detail::to_rat(hi.get())};
}

inline Interval log_interval(const Int& x, long prec = 96) { return log_interval(Rat(x), prec); }

/// Enclosure of log of an interval with positive lower end.
inline Interval log_interval(const Interval& v, long prec = 96) {
    if (v.lo <= 0) throw std::domain_error("log_interval: nonpositive interval");
    return {log_interval(v.lo, prec).lo, log_interval(v.hi, prec).hi};
}

/// Enclosure of exp(x) for rational x.
inline Interval exp_interval(const Rat& x, long prec = 96) {
    detail::MpfrGuard lo(prec), hi(prec);
    mpfr_set_q(lo.get(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_set_q(hi.get(), x.get_mpq_t(), MPFR_RNDU);
    mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
    return {detail::to_rat(lo.get()), detail::to_rat(hi.get())};
}

/// Enclosure of sqrt(x) for rational x >= 0 at roughly `prec` bits.
inline Interval sqrt_interval(const Rat& x, long prec = 96) {
    if (x < 0) throw std::domain_error("sqrt_interval: negative argument");
    if (x == 0) return Interval(Rat(0));
    detail::MpfrGuard lo(prec), hi(prec);
    mpfr_set_q(lo.get(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_set_q(hi.get(), x.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
    return {detail::to_rat(lo.get()), detail::to_rat(hi.get())};
}

inline Interval sqrt_interval(const Interval& v, long prec = 96) {
    return {sqrt_interval(std::max(Rat(0), v.lo), prec).lo, sqrt_interval(v.hi, prec).hi};
}

/// A certified real: a shrinkable enclosure. The recipe, when present, maps
/// a bit count to a fresh enclosure of width about 2^-bits; refinement
/// intersects it with the current one, so the interval only shrinks.
class CertReal {
  public:
    using Recipe = std::function<Interval(long bits)>;

    CertReal() : iv_(Rat(0)) {}
    explicit CertReal(const Rat& exact) : iv_(exact) {}
    explicit CertReal(Interval iv) : iv_(std::move(iv)) {}
    CertReal(Interval iv, Recipe r) : iv_(std::move(iv)), recipe_(std::move(r)) {}

    const Interval& interval() const { return iv_; }
    const Rat& lo() const { return iv_.lo; }
    const Rat& hi() const { return iv_.hi; }
    Rat mid() const { return iv_.mid(); }
    Rat width() const { return iv_.width(); }
    bool refinable() const { return static_cast<bool>(recipe_); }

    /// Shrink toward width <= target; returns whether the target was met.
    bool refine_to_width(const Rat& target, long max_bits = 1 << 16) {
        if (iv_.width() <= target) return true;
        if (!recipe_) return false;
        long bits = 64;
        while (bits <= max_bits) {
            iv_ = intersect(iv_, recipe_(bits));
            if (iv_.width() <= target) return true;
            bits *= 2;
        }
        return iv_.width() <= target;
    }

    bool refine_bits(long bits) { return refine_to_width(pow2(-bits), std::max(bits * 4, 1L << 12)); }

    CertReal operator+(const CertReal& o) const { return combine(*this, o, [](const Interval& a, const Interval& b) { return a + b; }); }
    CertReal operator-(const CertReal& o) const { return combine(*this, o, [](const Interval& a, const Interval& b) { return a - b; }); }
    CertReal operator*(const CertReal& o) const { return combine(*this, o, [](const Interval& a, const Interval& b) { return a * b; }); }
    CertReal operator/(const CertReal& o) const { return combine(*this, o, [](const Interval& a, const Interval& b) { return a / b; }); }

    CertReal operator+(const Rat& x) const { return *this + CertReal(x); }
    CertReal operator-(const Rat& x) const { return *this - CertReal(x); }
    CertReal operator*(const Rat& x) const { return *this * CertReal(x); }
    CertReal operator/(const Rat& x) const { return *this / CertReal(x); }

  private:
    template <class Op>
    static CertReal combine(const CertReal& a, const CertReal& b, Op op) {
        CertReal r;
        r.iv_ = op(a.iv_, b.iv_);
        if (a.recipe_ || b.recipe_) {
            CertReal ac = a, bc = b;
            r.recipe_ = [ac, bc, op](long bits) mutable {
                ac.refine_bits(bits);
                bc.refine_bits(bits);
                return op(ac.interval(), bc.interval());
            };
        }
        return r;
    }

    Interval iv_;
    Recipe recipe_;
};

/// Certified sqrt of an exact rational, refinable to any width.
inline CertReal sqrt_cert(const Rat& x) {
    return CertReal(sqrt_interval(x, 128),
                    [x](long bits) { return sqrt_interval(x, bits + 16); });
}

inline CertReal sqrt_cert(const CertReal& x) {
    CertReal xc = x;
    return CertReal(sqrt_interval(x.interval(), 128), [xc](long bits) mutable {
        xc.refine_bits(bits);
        return sqrt_interval(xc.interval(), bits + 16);
    });
}

/// (1+sqrt(5))/2 as a certified real.
inline CertReal golden_ratio() {
    return (sqrt_cert(Rat(5)) + Rat(1)) / Rat(2);
}

}  // namespace sturmlab
