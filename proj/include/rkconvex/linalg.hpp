#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace rkconvex {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

template <std::size_t N>
double dot(const std::array<double, N>& a, const std::array<double, N>& b) {
    double s = 0;
    for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
    return s;
}

template <std::size_t N>
double norm(const std::array<double, N>& a) {
    return std::sqrt(dot(a, a));
}

template <std::size_t N>
std::array<double, N> operator+(const std::array<double, N>& a, const std::array<double, N>& b) {
    std::array<double, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
    return r;
}

template <std::size_t N>
std::array<double, N> operator-(const std::array<double, N>& a, const std::array<double, N>& b) {
    std::array<double, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
    return r;
}

template <std::size_t N>
std::array<double, N> operator*(double s, const std::array<double, N>& a) {
    std::array<double, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = s * a[i];
    return r;
}

using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat4 = std::array<std::array<double, 4>, 4>;

inline double det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Eigenvalues of a symmetric 3x3 matrix by cyclic Jacobi rotations.
/// Sweeps until all off-diagonal entries fall below tol relative to the
/// matrix scale (at most max_sweeps sweeps). Returns ascending eigenvalues.
Vec3 jacobi_eigenvalues(Mat3 m, double tol = 1e-12, int max_sweeps = 50);

inline double min_eigenvalue(const Mat3& m) { return jacobi_eigenvalues(m)[0]; }

}  // namespace rkconvex
