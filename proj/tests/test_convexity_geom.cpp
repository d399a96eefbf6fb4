#include <doctest.h>

#include <cmath>

#include "rkconvex/errors.hpp"
#include "rkconvex/kepler.hpp"
#include "rkconvex/rng.hpp"
#include "rkconvex/surface.hpp"
#include "rkconvex/symbolic.hpp"

using namespace rkconvex;
using namespace rkconvex::convexity;

namespace {

double fd_hess_entry(const Vec2& z, const Vec2& w, double c, int i, int j, double h = 1e-5) {
    auto f = [&](const Vec4& v) { return F_value({v[0], v[1]}, {v[2], v[3]}, c); };
    Vec4 x{z[0], z[1], w[0], w[1]};
    Vec4 pp = x, pm = x, mp = x, mm = x;
    pp[i] += h;
    pp[j] += h;
    pm[i] += h;
    pm[j] -= h;
    mp[i] -= h;
    mp[j] += h;
    mm[i] -= h;
    mm[j] -= h;
    return (f(pp) - f(pm) - f(mp) + f(mm)) / (4 * h * h);
}

}  // namespace

TEST_CASE("F values") {
    CHECK(F_value({0, 0}, {0, 0}, -7.0) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(F_value({1, 0}, {0, 0}, -0.5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(F_value({0.5, 0}, {0, 0.5}, -2.0) == doctest::Approx(-0.25).epsilon(1e-14));
}

TEST_CASE("gradient quadruple against the symbolic partials") {
    // hand-pinned samples
    const auto g0 = gradient_g({1, 0}, {0, 0}, -3.0);
    CHECK(g0.g.g[0] == doctest::Approx(24.0).epsilon(1e-15));  // -8c z1
    CHECK(g0.g.g[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(g0.g.g[2] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(g0.g.g[3] == doctest::Approx(-4.0).epsilon(1e-15));  // -4 z1^3

    const auto g1 = gradient_g({1, 0}, {0, 1}, 0.0);
    CHECK(g1.g.g[0] == doctest::Approx(-24.0).epsilon(1e-15));
    CHECK(g1.grad[0] == doctest::Approx(-48.0).epsilon(1e-15));

    const auto gz = gradient_g({0, 0}, {0, 0}, 1.0);
    for (int i = 0; i < 4; ++i) CHECK(gz.grad[i] == 0.0);

    // numeric quadruple equals the exact partial / a at random points
    const auto& art = build_symbolic();
    Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
        const Vec2 z{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const Vec2 w{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const double c = rng.uniform(-3, 0);
        const auto gr = gradient_g(z, w, c);
        const std::array<double, 5> pt{z[0], z[1], w[0], w[1], c};
        for (int k = 0; k < 4; ++k) {
            const double exact = art.dF[k].eval_double(pt);
            CHECK(std::abs(gr.grad[k] - exact) < 1e-10 * (1 + std::abs(exact)));
        }
    }
}

TEST_CASE("Hessian of F: zero at the origin, matches finite differences") {
    const Mat4 h0 = hessian_F({0, 0}, {0, 0}, -2.0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(h0[i][j] == 0.0);  // no quadratic part in F

    Rng rng(99);
    for (int s = 0; s < 100; ++s) {
        const Vec2 z{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const Vec2 w{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const double c = rng.uniform(-4, 0);
        const Mat4 h = hessian_F(z, w, c);
        const Mat4 hneg = hessian_F({-z[0], -z[1]}, {-w[0], -w[1]}, c);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                CHECK(h[i][j] == h[j][i]);
                CHECK(h[i][j] == hneg[i][j]);  // F is even under the antipode
                const double fd = fd_hess_entry(z, w, c, i, j);
                CHECK(std::abs(h[i][j] - fd) < 1e-5 * (1 + std::abs(h[i][j])));
            }
    }

    // cross-check against the symbolic second partials
    const auto& art = build_symbolic();
    const Vec2 z{0.4, -0.2}, w{0.3, 0.1};
    const double c = -2.0;
    const Mat4 h = hessian_F(z, w, c);
    const std::array<double, 5> pt{z[0], z[1], w[0], w[1], c};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(std::abs(h[i][j] - art.hess[i][j].eval_double(pt)) < 1e-12);
}

TEST_CASE("tangent frame algebra") {
    const TangentFrame e = tangent_frame({Vec4{1, 0, 0, 0}});
    CHECK(e.v1 == Vec4{0, 1, 0, 0});
    CHECK(e.v2 == Vec4{0, 0, 1, 0});
    CHECK(e.v3 == Vec4{0, 0, 0, 1});

    const TangentFrame f = tangent_frame({Vec4{16, 0, 0, -4}});
    CHECK(f.v1 == Vec4{0, 16, -4, 0});
    CHECK(dot(f.v1, Vec4{16, 0, 0, -4}) == 0.0);

    Rng rng(12);
    for (int i = 0; i < 500; ++i) {
        const Vec4 g{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
        if (norm(g) < 1e-6) continue;
        const TangentFrame fr = tangent_frame({g});
        const std::array<Vec4, 3> v{fr.v1, fr.v2, fr.v3};
        for (int a = 0; a < 3; ++a) {
            CHECK(std::abs(dot(v[a], g)) < 1e-12 * dot(g, g));
            CHECK(std::abs(norm(v[a]) - norm(g)) < 1e-12 * norm(g));
            for (int b = a + 1; b < 3; ++b) CHECK(std::abs(dot(v[a], v[b])) < 1e-12 * dot(g, g));
        }
    }
    CHECK_THROWS_AS(tangent_frame({Vec4{0, 0, 0, 0}}), DegenerateFrameError);
}

TEST_CASE("tangential Hessian at the axis point, c = -2") {
    const double t = std::pow(4.0, -0.25);  // on-shell: -1 - 2 c t^4 = 0
    CHECK(std::abs(F_value({t, 0}, {0, 0}, -2.0)) < 1e-14);
    const TangentialHessian th = tangential_hessian({t, 0}, {0, 0}, -2.0);
    // frozen regression values: det equals the exact factor product
    // 524288 * (1/2)^6 * (9/2) * (7/2) * (57/2) * (65/4)^2
    CHECK(th.det == doctest::Approx(971006400.0).epsilon(1e-12));
    CHECK(th.min_eig == doctest::Approx(7.0).epsilon(1e-12));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(th.m[i][j] == th.m[j][i]);
}

TEST_CASE("determinant agrees with the factor product on-shell") {
    Rng rng(kDefaultSeed);
    for (int i = 0; i < 1000; ++i) {
        const Vec2 z{0.4 * rng.gaussian(), 0.4 * rng.gaussian()};
        const Vec2 w{0.4 * rng.gaussian(), 0.4 * rng.gaussian()};
        const double a = dot(z, z) + dot(w, w);
        if (a < 1e-2) continue;
        const double b = w[0] * z[1] - w[1] * z[0];
        const double c = -1.0 / (2 * a * a) + 2 * b;  // the point's own energy
        const TangentialHessian th = tangential_hessian(z, w, c);
        const FactorValues f = factor_values(a, b, c);
        const double rhs = 524288.0 * std::pow(a, 6) * f.f1 * f.f2 * f.f3 * f.f4 * f.f4;
        CHECK(std::abs(th.det - rhs) <= 1e-6 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("factor values") {
    const FactorValues f = factor_values(0.5, -0.25, -2.0);
    CHECK(f.f1 == doctest::Approx(3.5).epsilon(1e-15));
    CHECK(f.f2 == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(f.f4 == doctest::Approx(6.25).epsilon(1e-15));

    Rng rng(3);
    for (int i = 0; i < 100000; ++i) {
        const double a = rng.uniform(0, 1);
        const double b = rng.uniform(-0.5, 0.5) * a;
        const double c = -1.5 - rng.uniform(0, 8);
        const FactorValues v = factor_values(a, b, c);
        // numeric counterpart of the exact f4 identity
        const double lhs = v.f4 - 4 * (3 * b - c) * (3 * b - c);
        CHECK(std::abs(lhs - (a * a - 4 * b * b)) < 1e-10 * (1 + std::abs(lhs)));
        if (2 * std::abs(b) <= a && a < 1) {
            CHECK(v.f1 > 0);
            CHECK(v.f2 > 0);
        }
    }
}

TEST_CASE("f3 case analysis") {
    // boundary formula check at a = 1, c = -3/2 (outside the domain)
    CHECK(f3_onshell_numerator(1.0, -1.5) == doctest::Approx(0.0).epsilon(1e-14));
    // a^2 = 1/2 at the boundary energy: N = 9/16, f3 = 9/8
    const double a = std::sqrt(0.5);
    CHECK(f3_onshell_numerator(a, -1.5) == doctest::Approx(0.5625).epsilon(1e-13));

    const F3Trace t1 = f3_analysis(a, -1.5 - 1e-9);
    CHECK(t1.f3 == doctest::Approx(1.125).epsilon(1e-6));
    CHECK(t1.pass);
    CHECK(!t1.axis_case);  // a^2 = 1/2 > 7/18

    const F3Trace t2 = f3_analysis(0.5, -2.0);  // a^2 = 1/4 < 7/18
    CHECK(t2.axis_case);
    CHECK(t2.pass);

    // the case-boundary a^2 = 7/18: both case bounds hold
    const double ab = std::sqrt(7.0 / 18.0);
    const F3Trace t3 = f3_analysis(ab, -1.7);
    CHECK(t3.pass);
    CHECK(t3.numerator >= 3 * std::pow(ab * ab - 1, 3) * (ab * ab - 2) - 1e-9);
    CHECK(t3.numerator >= axis_value_at_case_boundary().get_d() - 1e-9);

    CHECK_THROWS_AS(f3_analysis(1.5, -2.0), DomainError);
    CHECK_THROWS_AS(f3_analysis(0.5, -1.0), DomainError);
}

TEST_CASE("axis value at the case boundary") {
    const auto v = axis_value_at_case_boundary();
    CHECK(std::abs(v.get_d() - 1.1028) < 5e-4);
}

TEST_CASE("sampling the bounded surface") {
    // closed-form roots along the z1-axis direction
    {
        const auto pts = sample_bounded_surface(-2.0, 1, 7);
        // appended axis point: t = (-2c)^(-1/4) = 2^(-1/2)
        const Vec4 axis = pts[pts.size() - 3];
        CHECK(axis[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    }
    {
        const auto pts = sample_bounded_surface(-8.0, 1, 7);
        const Vec4 axis = pts[pts.size() - 3];
        CHECK(axis[0] == doctest::Approx(0.5).epsilon(1e-12));
    }
    const auto pts = sample_bounded_surface(-2.0, 3000, kDefaultSeed);
    for (const auto& p : pts) {
        const Vec2 z{p[0], p[1]}, w{p[2], p[3]};
        CHECK(std::abs(F_value(z, w, -2.0)) < 1e-10);
        const double a = dot(z, z) + dot(w, w);
        const double b = w[0] * z[1] - w[1] * z[0];
        CHECK(2 * std::abs(b) <= a + 1e-12);
        CHECK(a < 1.0);
        // the antipode lies on the surface with identical diagnostics
        const TangentialHessian th = tangential_hessian(z, w, -2.0);
        const TangentialHessian ta = tangential_hessian({-z[0], -z[1]}, {-w[0], -w[1]}, -2.0);
        CHECK(std::abs(th.det - ta.det) < 1e-9 * (1 + std::abs(th.det)));
        CHECK(std::abs(th.min_eig - ta.min_eig) < 1e-9 * (1 + std::abs(th.min_eig)));
    }
    CHECK_THROWS_AS(sample_bounded_surface(-1.2, 10, 1), DomainError);
}

TEST_CASE("convexity certification at c = -2") {
    const ConvexityCertificate cert = certify_convexity(-2.0, 20000, kDefaultSeed);
    CHECK(cert.pass);
    CHECK(cert.min_eig > 0);
    CHECK(cert.min_det > 0);
    CHECK(cert.violations.empty());
    CHECK(cert.frame_anomalies == 0);
    CHECK(cert.sigma == -1);
    // loose bracket around the prototype regression value (~5.28)
    CHECK(cert.min_eig > 4.0);
    CHECK(cert.min_eig < 7.0);
    CHECK(cert.factor_minima.f1 > 0);
    CHECK(cert.factor_minima.f2 > 0);
    CHECK(cert.factor_minima.f3 > 0);
    CHECK(cert.factor_minima.f4 > 0);
}

TEST_CASE("certification near the critical energy") {
    const ConvexityCertificate cert = certify_convexity(-1.6, 4000, 11);
    CHECK(cert.pass);
}

TEST_CASE("collision-circle point diagnostics") {
    for (double c : {-1.6, -2.0, -8.0}) {
        const double t = std::pow(-2.0 * c, -0.25);
        const Vec2 z{0, 0}, w{t, 0};
        CHECK(std::abs(F_value(z, w, c)) < 1e-14);
        const auto gr = gradient_g(z, w, c);
        CHECK(norm(gr.grad) > 1e-6);
        const TangentialHessian th = tangential_hessian(z, w, c);
        CHECK(th.min_eig > 0);
    }
}
