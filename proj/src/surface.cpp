#include "rkconvex/surface.hpp"

#include <cmath>

#include "rkconvex/errors.hpp"
#include "rkconvex/kepler.hpp"
#include "rkconvex/parallel.hpp"
#include "rkconvex/rng.hpp"

namespace rkconvex::convexity {

namespace {

struct Invariants {
    double a, b;
};

Invariants invariants(const Vec2& z, const Vec2& w) {
    return {dot(z, z) + dot(w, w), w[0] * z[1] - w[1] * z[0]};
}

constexpr double kFrameTol = 1e-10;

}  // namespace

double F_value(const Vec2& z, const Vec2& w, double c) {
    const auto [a, b] = invariants(z, w);
    return -1.0 + (4.0 * b - 2.0 * c) * a * a;
}

GradientResult gradient_g(const Vec2& z, const Vec2& w, double c) {
    const double z1 = z[0], z2 = z[1], w1 = w[0], w2 = w[1];
    GradientResult out;
    out.g.g = {
        -4 * w1 * w1 * w2 + 16 * w1 * z1 * z2 - 4 * w2 * w2 * w2 - 20 * w2 * z1 * z1 -
            4 * w2 * z2 * z2 - 8 * c * z1,
        4 * w1 * w1 * w1 + 4 * w1 * w2 * w2 + 4 * w1 * z1 * z1 + 20 * w1 * z2 * z2 -
            16 * w2 * z1 * z2 - 8 * c * z2,
        20 * w1 * w1 * z2 - 16 * w1 * w2 * z1 + 4 * w2 * w2 * z2 + 4 * z1 * z1 * z2 +
            4 * z2 * z2 * z2 - 8 * c * w1,
        -4 * w1 * w1 * z1 + 16 * w1 * w2 * z2 - 20 * w2 * w2 * z1 - 4 * z1 * z1 * z1 -
            4 * z1 * z2 * z2 - 8 * c * w2,
    };
    const double a = invariants(z, w).a;
    out.grad = a * out.g.g;
    return out;
}

Mat4 hessian_F(const Vec2& z, const Vec2& w, double c) {
    // F = (4b - 2c) * A with A = a^2; grad a = 2x, Hess b has the constant
    // +-1 pattern of the bilinear form w1 z2 - w2 z1
    const Vec4 x{z[0], z[1], w[0], w[1]};
    const double a = dot(x, x);
    const double b = x[2] * x[1] - x[3] * x[0];
    const Vec4 ga = 2.0 * x;
    const Vec4 gb{-x[3], x[2], x[1], -x[0]};
    Mat4 h{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double hb = 0;
            if ((i == 0 && j == 3) || (i == 3 && j == 0)) hb = -1;
            if ((i == 1 && j == 2) || (i == 2 && j == 1)) hb = 1;
            const double ha = 2.0 * ga[i] * ga[j] + (i == j ? 4.0 * a : 0.0);
            h[i][j] = 4.0 * (hb * a * a + 2.0 * a * (gb[i] * ga[j] + gb[j] * ga[i])) +
                      (4.0 * b - 2.0 * c) * ha;
        }
    return h;
}

TangentFrame tangent_frame(const GradientQuadruple& gq) {
    const auto& g = gq.g;
    if (norm(g) <= kFrameTol) throw DegenerateFrameError("gradient too small for a tangent frame");
    return {
        Vec4{-g[1], g[0], g[3], -g[2]},
        Vec4{-g[2], -g[3], g[0], g[1]},
        Vec4{-g[3], g[2], -g[1], g[0]},
    };
}

TangentialHessian tangential_hessian(const Vec2& z, const Vec2& w, double c) {
    const GradientResult gr = gradient_g(z, w, c);
    const TangentFrame fr = tangent_frame(gr.g);
    const Mat4 h = hessian_F(z, w, c);
    const std::array<const Vec4*, 3> v{&fr.v1, &fr.v2, &fr.v3};
    TangentialHessian out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) s += (*v[i])[k] * h[k][l] * (*v[j])[l];
            out.m[i][j] = s;
        }
    // exact symmetry up to rounding; symmetrize so the eigensolver sees it
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const double s = 0.5 * (out.m[i][j] + out.m[j][i]);
            out.m[i][j] = out.m[j][i] = s;
        }
    out.det = det3(out.m);
    const double gn2 = dot(gr.g.g, gr.g.g);
    Mat3 scaled = out.m;
    for (auto& row : scaled)
        for (auto& x : row) x /= gn2;
    out.min_eig = jacobi_eigenvalues(scaled)[0];
    return out;
}

FactorValues factor_values(double a, double b, double c) {
    return {
        -2 * c + a + 4 * b,
        -2 * c - a + 4 * b,
        -4 * c * c * c + 28 * b * c * c - (88 * b * b - 7 * a * a) * c + 96 * b * b * b -
            15 * a * a * b,
        4 * c * c - 24 * b * c + a * a + 32 * b * b,
    };
}

double f3_onshell_numerator(double a, double c) {
    const double a2 = a * a;
    const double a4 = a2 * a2, a6 = a4 * a2, a8 = a4 * a4;
    return 12 * c * c * a4 - 2 * c * a8 - 15 * a6 + 14 * c * a2 + 6;
}

F3Trace f3_analysis(double a, double c) {
    if (!(a > 0 && a < 1)) throw DomainError("f3 analysis requires 0 < a < 1");
    if (!(c < -1.5)) throw DomainError("f3 analysis requires c < -3/2");
    F3Trace t;
    t.a = a;
    t.c = c;
    const double a2 = a * a, a6 = a2 * a2 * a2, a12 = a6 * a6;
    t.axis_c = -(7.0 - a6) / (12.0 * a2);
    t.axis_case = a2 < 7.0 / 18.0;
    t.numerator = f3_onshell_numerator(a, c);
    t.f3 = t.numerator / (4.0 * a6);
    if (t.axis_case) {
        // global minimum of the upward parabola, attained at the axis
        t.lower_bound = (-a12 - 166.0 * a6 + 23.0) / 12.0;
    } else {
        // axis lies right of -3/2, so N decreases on c < -3/2
        t.lower_bound = 3.0 * (a2 - 1) * (a2 - 1) * (a2 - 1) * (a2 - 2);
    }
    t.pass = t.f3 > 0 && t.numerator >= t.lower_bound - 1e-9;
    return t;
}

std::vector<Vec4> sample_bounded_surface(double c, int count, std::uint64_t seed) {
    if (!(c < -1.5)) throw DomainError("sampling requires c < -3/2");
    if (count < 1) throw DomainError("sample count must be >= 1");
    std::vector<Vec4> pts;
    pts.reserve(static_cast<std::size_t>(count) + 3);
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        const Vec4 xi = rng.unit4();
        // along a unit direction F(t xi) = -1 - 2c t^4 + 4 b t^6 rises
        // monotonically on (0,1] with F(1) > 0, so the root is unique
        const double b = xi[2] * xi[1] - xi[3] * xi[0];
        auto f = [&](double t) {
            const double t2 = t * t, t4 = t2 * t2;
            return -1.0 - 2.0 * c * t4 + 4.0 * b * t4 * t2;
        };
        if (!(f(1.0) > 0.0)) throw RootBracketError("no sign change along sampling ray");
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (f(mid) < 0 ? lo : hi) = mid;
        }
        const double t = 0.5 * (lo + hi);
        pts.push_back(t * xi);
    }
    const double t_axis = std::pow(-2.0 * c, -0.25);
    pts.push_back({t_axis, 0, 0, 0});
    pts.push_back({-t_axis, 0, 0, 0});
    pts.push_back({0, 0, t_axis, 0});  // collision circle: z = 0, |w| = (-2c)^(-1/4)
    return pts;
}

ConvexityCertificate certify_convexity(double c, int count, std::uint64_t seed, unsigned jobs) {
    const auto pts = sample_bounded_surface(c, count, seed);
    const std::size_t n = pts.size();

    struct PointDiag {
        double det, min_eig;
        Vec3 eigs;
        FactorValues f;
        bool degenerate;
    };
    std::vector<PointDiag> diag(n);
    parallel_for(n, jobs, [&](std::size_t i) {
        const Vec2 z{pts[i][0], pts[i][1]}, w{pts[i][2], pts[i][3]};
        PointDiag d{};
        try {
            const TangentialHessian th = tangential_hessian(z, w, c);
            const GradientResult gr = gradient_g(z, w, c);
            const double gn2 = dot(gr.g.g, gr.g.g);
            Mat3 scaled = th.m;
            for (auto& row : scaled)
                for (auto& x : row) x /= gn2;
            d.det = th.det;
            d.min_eig = th.min_eig;
            d.eigs = jacobi_eigenvalues(scaled);
            const auto [a, b] = invariants(z, w);
            d.f = factor_values(a, b, c);
            d.degenerate = false;
        } catch (const DegenerateFrameError&) {
            d.degenerate = true;
        }
        diag[i] = d;
    });

    ConvexityCertificate cert;
    cert.c = c;
    cert.samples = static_cast<int>(n);
    cert.seed = seed;
    cert.sigma = kepler::resolved_sigma();
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& d = diag[i];
        if (d.degenerate) {
            ++cert.frame_anomalies;
            continue;
        }
        if (first || d.min_eig < cert.min_eig) {
            cert.min_eig = d.min_eig;
            cert.argmin = pts[i];
        }
        if (first || d.det < cert.min_det) cert.min_det = d.det;
        if (first) {
            cert.factor_minima = d.f;
        } else {
            cert.factor_minima.f1 = std::min(cert.factor_minima.f1, d.f.f1);
            cert.factor_minima.f2 = std::min(cert.factor_minima.f2, d.f.f2);
            cert.factor_minima.f3 = std::min(cert.factor_minima.f3, d.f.f3);
            cert.factor_minima.f4 = std::min(cert.factor_minima.f4, d.f.f4);
        }
        if (d.min_eig <= 0) cert.violations.push_back({pts[i], d.eigs});
        first = false;
    }
    cert.pass = !first && cert.min_eig > 0 && cert.violations.empty() && cert.frame_anomalies == 0;
    return cert;
}

}  // namespace rkconvex::convexity
