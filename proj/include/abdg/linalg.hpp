#pragma once

// Fixed-size vector helpers written once for double and MultiJet scalars.

#include <array>
#include <cmath>

#include "abdg/jet.hpp"

namespace abdg {

template <class T> using Vec2 = std::array<T, 2>;
template <class T> using Vec3 = std::array<T, 3>;
// Row-major 3x3; m[r][c].
template <class T> using Mat3 = std::array<std::array<T, 3>, 3>;
template <class T> using Mat2 = std::array<std::array<T, 2>, 2>;

using JetVec3 = Vec3<MultiJet>;

template <class T> Vec3<T> operator+(const Vec3<T>& a, const Vec3<T>& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
template <class T> Vec3<T> operator-(const Vec3<T>& a, const Vec3<T>& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
template <class T> Vec3<T> operator-(const Vec3<T>& a) { return {-a[0], -a[1], -a[2]}; }
template <class T, class S> Vec3<T> operator*(const S& s, const Vec3<T>& a) {
    return {a[0] * s, a[1] * s, a[2] * s};
}
template <class T, class S> Vec3<T> operator/(const Vec3<T>& a, const S& s) {
    return {a[0] / s, a[1] / s, a[2] / s};
}

template <class T> T dot(const Vec3<T>& a, const Vec3<T>& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

template <class T> Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class T> T det3(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c) { return dot(a, cross(b, c)); }

inline double norm(const Vec3<double>& a) { return std::sqrt(dot(a, a)); }

inline Vec3<double> values(const JetVec3& a) { return {a[0].value(), a[1].value(), a[2].value()}; }
inline Vec3<double> values(const Vec3<double>& a) { return a; }

inline JetVec3 du(const JetVec3& a) { return {a[0].du(), a[1].du(), a[2].du()}; }
inline JetVec3 dv(const JetVec3& a) { return {a[0].dv(), a[1].dv(), a[2].dv()}; }
inline JetVec3 truncated(const JetVec3& a, int order) {
    return {a[0].truncated(order), a[1].truncated(order), a[2].truncated(order)};
}

// Rows of the inverse of the matrix with columns (c0, c1, c2): row k is the
// covector picking the c_k coefficient of a vector.
template <class T> Mat3<T> dual_rows(const Vec3<T>& c0, const Vec3<T>& c1, const Vec3<T>& c2, const T& det) {
    Vec3<T> r0 = cross(c1, c2), r1 = cross(c2, c0), r2 = cross(c0, c1);
    return {r0 / det, r1 / det, r2 / det};
}

// Coefficients of x in the basis (c0, c1, c2).
template <class T> Vec3<T> coords_in(const Mat3<T>& rows, const Vec3<T>& x) {
    return {dot(rows[0], x), dot(rows[1], x), dot(rows[2], x)};
}

template <class T> T det2(const Vec2<T>& a, const Vec2<T>& b) { return a[0] * b[1] - a[1] * b[0]; }

template <class T> Mat2<T> inverse2(const Mat2<T>& m) {
    T d = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return {{{m[1][1] / d, -m[0][1] / d}, {-m[1][0] / d, m[0][0] / d}}};
}

} // namespace abdg
