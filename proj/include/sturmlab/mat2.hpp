#pragma once

// 2x2 matrices over exact scalars (Int or Rat), row-major (a b; c d).
// These carry the whole recurrence w_{k+1} = w_k^{s_{k+1}} w_{k-1}; entry
// sizes grow exponentially, so products dominate cost, not the exponents.

#include <stdexcept>
#include <string>

#include "sturmlab/numeric.hpp"

namespace sturmlab {

template <class T>
struct Mat2 {
    T a{}, b{}, c{}, d{};

    Mat2() = default;
    Mat2(T a_, T b_, T c_, T d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }
    /// J = (0 1; -1 0).
    static Mat2 j() { return {T(0), T(1), T(-1), T(0)}; }

    bool operator==(const Mat2&) const = default;

    Mat2 operator+(const Mat2& m) const { return {a + m.a, b + m.b, c + m.c, d + m.d}; }
    Mat2 operator-(const Mat2& m) const { return {a - m.a, b - m.b, c - m.c, d - m.d}; }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }

    Mat2 operator*(const Mat2& m) const {
        return {a * m.a + b * m.c, a * m.b + b * m.d,
                c * m.a + d * m.c, c * m.b + d * m.d};
    }

    Mat2 operator*(const T& s) const { return {a * s, b * s, c * s, d * s}; }

    Mat2 transpose() const { return {a, c, b, d}; }
    /// Adj(M) with M*Adj(M) = det(M)*Id.
    Mat2 adjugate() const { return {d, -b, -c, a}; }

    T det() const { return a * d - b * c; }
    T trace() const { return a + d; }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    bool is_symmetric() const { return b == c; }
    bool is_invertible() const { return det() != 0; }
};

using IntMat2 = Mat2<Int>;
using RatMat2 = Mat2<Rat>;

/// Binary exponentiation, e >= 0.
template <class T>
Mat2<T> pow(const Mat2<T>& m, unsigned long e) {
    Mat2<T> acc = Mat2<T>::identity();
    Mat2<T> base = m;
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        base = base * base;
        e >>= 1UL;
    }
    return acc;
}

template <class T>
T sup_norm(const Mat2<T>& m) {
    T n = abs(m.a);
    if (abs(m.b) > n) n = abs(m.b);
    if (abs(m.c) > n) n = abs(m.c);
    if (abs(m.d) > n) n = abs(m.d);
    return n;
}

/// gcd of the entries, positive. Content of the zero matrix is undefined.
inline Int content(const Mat2<Int>& m) {
    if (m.is_zero()) throw std::domain_error("content: zero matrix");
    return gcd(gcd(abs(m.a), abs(m.b)), gcd(abs(m.c), abs(m.d)));
}

/// Positive rational alpha with alpha^-1 * m a primitive integer matrix.
inline Rat content(const Mat2<Rat>& m) {
    if (m.is_zero()) throw std::domain_error("content: zero matrix");
    Int l = lcm(lcm(den(m.a), den(m.b)), lcm(den(m.c), den(m.d)));
    Int g = gcd(gcd(abs(num(m.a) * (l / den(m.a))), abs(num(m.b) * (l / den(m.b)))),
                gcd(abs(num(m.c) * (l / den(m.c))), abs(num(m.d) * (l / den(m.d)))));
    return make_rat(g, l);
}

inline RatMat2 to_rat(const IntMat2& m) {
    return {Rat(m.a), Rat(m.b), Rat(m.c), Rat(m.d)};
}

inline RatMat2 operator/(const RatMat2& m, const Rat& s) {
    return {m.a / s, m.b / s, m.c / s, m.d / s};
}

inline RatMat2 inverse(const RatMat2& m) {
    Rat dt = m.det();
    if (dt == 0) throw std::domain_error("inverse: singular matrix");
    return m.adjugate() / dt;
}

inline RatMat2 inverse(const IntMat2& m) { return inverse(to_rat(m)); }

/// Exact primitive integer matrix and the content it was scaled away by.
inline IntMat2 primitive_part(const Mat2<Rat>& m, Rat* cont_out = nullptr) {
    Rat c = content(m);
    if (cont_out) *cont_out = c;
    RatMat2 p = m / c;
    return {num(p.a), num(p.b), num(p.c), num(p.d)};
}

template <class T>
std::string to_string(const Mat2<T>& m) {
    auto e = [](const T& x) {
        if constexpr (std::is_same_v<T, Int>) return x.get_str();
        else return x.get_str();
    };
    return "(" + e(m.a) + "," + e(m.b) + ";" + e(m.c) + "," + e(m.d) + ")";
}

}  // namespace sturmlab
