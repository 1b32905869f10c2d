#pragma once

// Points of Z^3 (or Q^3) identified with symmetric 2x2 matrices,
//     (x0, x1, x2)  <->  (x0 x1; x1 x2)  <->  x0 + x1*X + x2*X^2.
// The wedge of two symmetric matrices is the cross product of the points,
// and U: (a b; c d) -> (-c, a-d, b) sends a matrix to the quadratic whose
// roots are the fixed points of the associated homography.

#include <array>
#include <stdexcept>
#include <string>

#include "sturmlab/mat2.hpp"
#include "sturmlab/numeric.hpp"

namespace sturmlab {

template <class T>
struct SymPoint {
    T x0{}, x1{}, x2{};

    SymPoint() = default;
    SymPoint(T a, T b, T c) : x0(std::move(a)), x1(std::move(b)), x2(std::move(c)) {}

    bool operator==(const SymPoint&) const = default;

    SymPoint operator+(const SymPoint& p) const { return {x0 + p.x0, x1 + p.x1, x2 + p.x2}; }
    SymPoint operator-(const SymPoint& p) const { return {x0 - p.x0, x1 - p.x1, x2 - p.x2}; }
    SymPoint operator-() const { return {-x0, -x1, -x2}; }
    SymPoint operator*(const T& s) const { return {x0 * s, x1 * s, x2 * s}; }

    /// det of the identified symmetric matrix: x0*x2 - x1^2.
    T det() const { return x0 * x2 - x1 * x1; }

    bool is_zero() const { return x0 == 0 && x1 == 0 && x2 == 0; }

    Mat2<T> as_mat() const { return {x0, x1, x1, x2}; }
};

using IntPoint = SymPoint<Int>;
using RatPoint = SymPoint<Rat>;

template <class T>
SymPoint<T> from_sym(const Mat2<T>& m) {
    if (!m.is_symmetric()) throw std::domain_error("from_sym: matrix not symmetric");
    return {m.a, m.b, m.d};
}

/// U(a b; c d) = (-c, a-d, b). U(Adj X) = -U(X); U(X)=0 iff X prop. to Id.
template <class T>
SymPoint<T> u_map(const Mat2<T>& m) {
    return {-m.c, m.a - m.d, m.b};
}

template <class T>
SymPoint<T> cross(const SymPoint<T>& x, const SymPoint<T>& y) {
    return {x.x1 * y.x2 - x.x2 * y.x1,
            x.x2 * y.x0 - x.x0 * y.x2,
            x.x0 * y.x1 - x.x1 * y.x0};
}

template <class T>
T dot(const SymPoint<T>& x, const SymPoint<T>& y) {
    return x.x0 * y.x0 + x.x1 * y.x1 + x.x2 * y.x2;
}

/// Determinant of the 3x3 matrix with rows x, y, z; zero iff coplanar.
template <class T>
T det3(const SymPoint<T>& x, const SymPoint<T>& y, const SymPoint<T>& z) {
    return dot(x, cross(y, z));
}

template <class T>
bool proportional(const SymPoint<T>& x, const SymPoint<T>& y) {
    return cross(x, y).is_zero();
}

template <class T>
T sup_norm(const SymPoint<T>& p) {
    T n = abs(p.x0);
    if (abs(p.x1) > n) n = abs(p.x1);
    if (abs(p.x2) > n) n = abs(p.x2);
    return n;
}

inline Int content(const SymPoint<Int>& p) {
    if (p.is_zero()) throw std::domain_error("content: zero point");
    return gcd(gcd(abs(p.x0), abs(p.x1)), abs(p.x2));
}

inline Rat content(const SymPoint<Rat>& p) {
    if (p.is_zero()) throw std::domain_error("content: zero point");
    Int l = lcm(lcm(den(p.x0), den(p.x1)), den(p.x2));
    Int g = gcd(gcd(abs(num(p.x0) * (l / den(p.x0))), abs(num(p.x1) * (l / den(p.x1)))),
                abs(num(p.x2) * (l / den(p.x2))));
    return make_rat(g, l);
}

inline RatPoint to_rat(const IntPoint& p) { return {Rat(p.x0), Rat(p.x1), Rat(p.x2)}; }

inline RatPoint operator/(const RatPoint& p, const Rat& s) {
    if (s == 0) throw std::domain_error("SymPoint: division by zero");
    return {p.x0 / s, p.x1 / s, p.x2 / s};
}

/// Content-normalized integer point. The sign convention follows the input.
inline IntPoint primitive_part(const RatPoint& p, Rat* cont_out = nullptr) {
    Rat c = content(p);
    if (cont_out) *cont_out = c;
    return {num(p.x0 / c), num(p.x1 / c), num(p.x2 / c)};
}

inline IntPoint primitive_part(const IntPoint& p) {
    Int c = content(p);
    return {p.x0 / c, p.x1 / c, p.x2 / c};
}

template <class T>
std::string to_string(const SymPoint<T>& p) {
    return "(" + p.x0.get_str() + "," + p.x1.get_str() + "," + p.x2.get_str() + ")";
}

}  // namespace sturmlab
