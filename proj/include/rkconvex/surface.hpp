#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rkconvex/linalg.hpp"

namespace rkconvex::convexity {

/// Defining function of the regularized energy surface:
/// F = -1 + 4 b a^2 - 2 c a^2 with a = |w|^2 + |z|^2, b = w1 z2 - w2 z1.
/// Its zero set at parameter c is the surface; F(0) = -1, so F < 0 inside
/// and the gradient points outward on the boundary.
double F_value(const Vec2& z, const Vec2& w, double c);

/// The quadruple g with grad F = a * g, components ordered (z1,z2,w1,w2).
struct GradientQuadruple {
    Vec4 g;
};

struct GradientResult {
    GradientQuadruple g;
    Vec4 grad;  // a * g
};
GradientResult gradient_g(const Vec2& z, const Vec2& w, double c);

/// Hessian of F, exact closed form (symmetric).
Mat4 hessian_F(const Vec2& z, const Vec2& w, double c);

/// Orthogonal tangent frame obtained from g by quaternion right
/// multiplication with i, j, k: each v_i is orthogonal to g and to the
/// others, with |v_i| = |g|.
struct TangentFrame {
    Vec4 v1, v2, v3;
};
TangentFrame tangent_frame(const GradientQuadruple& g);  // DegenerateFrameError if |g| ~ 0

/// Tangential Hessian at a chart point: M_ij = v_i^T Hess(F) v_j.
/// det is of the unnormalized M (the quantity the exact factorization
/// describes); eigenvalues are of M / |g|^2.
struct TangentialHessian {
    Mat3 m;
    double det;
    double min_eig;
};
TangentialHessian tangential_hessian(const Vec2& z, const Vec2& w, double c);

/// The four factors of the tangential-Hessian determinant, evaluated from
/// the surface invariants.
struct FactorValues {
    double f1, f2, f3, f4;
};
FactorValues factor_values(double a, double b, double c);

/// On-shell numerator N(a,c) = 12 c^2 a^4 - 2 c a^8 - 15 a^6 + 14 c a^2 + 6
/// of the third factor, with f3 = N / (4 a^6) on the surface.
double f3_onshell_numerator(double a, double c);

/// Case trace for positivity of the third factor on 0 < a < 1, c < -3/2:
/// the numerator N is quadratic in c with axis c* = -(7 - a^6)/(12 a^2);
/// for a^2 >= 7/18 it is decreasing on c < -3/2 and bounded below by its
/// value at c = -3/2, otherwise by its value at the axis.
struct F3Trace {
    double a, c;
    bool axis_case;      // true when a^2 < 7/18 (bound taken at the axis)
    double axis_c;       // c* for this a
    double numerator;    // N(a, c)
    double f3;           // N / (4 a^6)
    double lower_bound;  // case bound on N
    bool pass;           // f3 > 0 and N >= bound - 1e-9
};
F3Trace f3_analysis(double a, double c);

/// Seeded on-shell sample of the bounded surface component: for each
/// uniform direction xi on S^3 the ray F(t*xi) = 0 has exactly one root in
/// (0,1), found by bisection. The two z-axis points and a collision-circle
/// point (z = 0) are always appended.
std::vector<Vec4> sample_bounded_surface(double c, int count, std::uint64_t seed);

struct Violation {
    Vec4 point;
    Vec3 eigenvalues;
};

/// Sampled convexity diagnostics of one surface.
struct ConvexityCertificate {
    double c = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    int sigma = 0;
    double min_det = 0;
    double min_eig = 0;
    Vec4 argmin{};
    FactorValues factor_minima{};
    std::vector<Violation> violations;
    int frame_anomalies = 0;  // gradient below the frame threshold (never expected)
    bool pass = false;
};

ConvexityCertificate certify_convexity(double c, int count, std::uint64_t seed, unsigned jobs = 0);

}  // namespace rkconvex::convexity
