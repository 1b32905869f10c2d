#pragma once

// Exact scalar layer: arbitrary-precision integers and reduced rationals
// backed by GMP. Everything downstream assumes no overflow, ever.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sturmlab {

using Int = mpz_class;
using Rat = mpq_class;

inline Int abs(const Int& x) { return ::abs(x); }
inline Rat abs(const Rat& x) { return ::abs(x); }

inline int sign(const Int& x) { return sgn(x); }
inline int sign(const Rat& x) { return sgn(x); }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int m;
    mpz_lcm(m.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return m;
}

/// num/den kept canonical: reduced, denominator > 0.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat to_rat(const Int& x) { return Rat(x); }

inline Int num(const Rat& q) { return q.get_num(); }
inline Int den(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// floor(num/den) as an exact integer.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

inline Int ceil(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

inline Int pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow(const Rat& base, unsigned long e) {
    return make_rat(pow(Int(base.get_num()), e), pow(Int(base.get_den()), e));
}

/// 2^-bits as an exact rational, the usual width target for refinement.
inline Rat pow2(long bits) {
    Rat r;
    if (bits >= 0) {
        Int p = 1;
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(bits));
        r = Rat(p);
    } else {
        Int p = 1;
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(-bits));
        r = make_rat(1, p);
    }
    return r;
}

inline double to_double(const Rat& q) { return q.get_d(); }
inline double to_double(const Int& x) { return x.get_d(); }

/// Fixed-point decimal rendering, round toward zero. Deterministic across
/// platforms, used for all machine-readable output.
inline std::string decimal_string(const Rat& q, int digits = 12) {
    Rat a = abs(q);
    Int scale = pow(Int(10), static_cast<unsigned long>(digits));
    Int scaled = floor_div(a.get_num() * scale, a.get_den());
    Int ip = scaled / scale;
    Int fp = scaled % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    std::string s = (sign(q) < 0 ? "-" : "") + ip.get_str() + "." + frac;
    return s;
}

}  // namespace sturmlab
