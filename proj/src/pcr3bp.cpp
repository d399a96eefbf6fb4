#include "rkconvex/pcr3bp.hpp"

#include <cmath>

#include "rkconvex/errors.hpp"
#include "rkconvex/parallel.hpp"
#include "rkconvex/rng.hpp"
#include "rkconvex/surface.hpp"

namespace rkconvex::r3bp {

namespace {

double dist(const Vec2& a, const Vec2& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

constexpr double kGradSkipTol = 1e-8;  // near-critical frame throttle

}  // namespace

double r3bp_hamiltonian(double mu, const Vec2& q, const Vec2& p) {
    const Vec2 e{-mu, 0}, m{1 - mu, 0};
    const double de = dist(q, e), dm = dist(q, m);
    if (de == 0 || dm == 0) throw DomainError("position at a primary");
    double h = 0.5 * dot(p, p) - (1 - mu) / de + p[0] * q[1] - p[1] * q[0];
    if (mu != 0) h -= mu / dm;
    return h;
}

double r3bp_effective_potential(double mu, const Vec2& q) {
    const Vec2 e{-mu, 0}, m{1 - mu, 0};
    const double de = dist(q, e), dm = dist(q, m);
    if (de == 0 || dm == 0) throw DomainError("position at a primary");
    double u = -(1 - mu) / de - 0.5 * dot(q, q);
    if (mu != 0) u -= mu / dm;
    return u;
}

LagrangePoint lagrange_L1(double mu) {
    if (!(mu > 0 && mu < 1)) throw DomainError("mass ratio must lie in (0,1)");
    // derivative of U_eff along the axis between the primaries:
    // +inf at E, -inf at M, strictly one zero between them
    auto du = [mu](double x) {
        return (1 - mu) / ((x + mu) * (x + mu)) - mu / ((x - 1 + mu) * (x - 1 + mu)) - x;
    };
    double lo = -mu, hi = 1 - mu;
    // nudge off the poles
    const double eps = 1e-13 * std::max(1.0, std::abs(hi - lo));
    lo += eps;
    hi -= eps;
    if (!(du(lo) > 0 && du(hi) < 0)) throw RootBracketError("no bracket between the primaries");
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        (du(mid) > 0 ? lo : hi) = mid;
    }
    LagrangePoint l1;
    l1.x = 0.5 * (lo + hi);
    l1.critical_value = r3bp_effective_potential(mu, {l1.x, 0});
    return l1;
}

RegularizedSurfaceSpec::RegularizedSurfaceSpec(double mu_, double c_, Primary primary_)
    : mu(mu_), c(c_), primary(primary_) {
    if (mu < 0 || mu >= 1) throw DomainError("mass ratio outside [0,1)");
    if (mu == 0) {
        primary_x = 0;
        primary_mass = 1;
        other_x = 0;
        other_mass = 0;
        if (!(c < -1.5)) throw DomainError("energy not below the critical value");
        return;
    }
    const bool heavy_is_e = (1 - mu) >= mu;
    const bool chart_on_e = (primary == Primary::Heavy) == heavy_is_e;
    if (chart_on_e) {
        primary_x = -mu;
        primary_mass = 1 - mu;
        other_x = 1 - mu;
        other_mass = mu;
    } else {
        primary_x = 1 - mu;
        primary_mass = mu;
        other_x = -mu;
        other_mass = 1 - mu;
    }
    if (!(c < lagrange_L1(mu).critical_value))
        throw DomainError("energy not below the first critical value");
}

double regularized_hamiltonian(const RegularizedSurfaceSpec& spec, const Vec2& z, const Vec2& w) {
    // |z|^2 * (H - c) with the primary's -m_p/|Q - primary| pole cancelled
    // analytically; every remaining term is polynomial or regular
    const double nz = dot(z, z), nw = dot(w, w);
    const double b = w[0] * z[1] - w[1] * z[0];
    double k = nw / 32.0 - 0.5 * spec.primary_mass + 0.5 * nz * b - spec.c * nz -
               0.25 * spec.primary_x * (w[0] * z[1] + w[1] * z[0]);
    if (spec.other_mass != 0) {
        const double d1 = spec.primary_x - spec.other_x + 2.0 * (z[0] * z[0] - z[1] * z[1]);
        const double d2 = 4.0 * z[0] * z[1];
        const double d = std::hypot(d1, d2);
        if (d == 0) throw DomainError("chart point at the other primary");
        k -= spec.other_mass * nz / d;
    }
    return k;
}

void chart_map(const RegularizedSurfaceSpec& spec, const Vec2& z, const Vec2& w, Vec2& q,
               Vec2& p) {
    const double nz = dot(z, z);
    if (nz == 0) throw DomainError("chart map at z = 0");
    q = {spec.primary_x + 2.0 * (z[0] * z[0] - z[1] * z[1]), 4.0 * z[0] * z[1]};
    // P = w / (4 conj(z))
    const double s = 1.0 / (4.0 * nz);
    p = {s * (w[0] * z[0] - w[1] * z[1]), s * (w[0] * z[1] + w[1] * z[0])};
}

double chart_symplecticity_defect(const RegularizedSurfaceSpec& spec, const Vec4& point,
                                  double h) {
    std::array<Vec4, 4> cols;
    for (int i = 0; i < 4; ++i) {
        Vec4 a = point, b = point;
        a[i] += h;
        b[i] -= h;
        Vec2 qa, pa, qb, pb;
        chart_map(spec, {a[0], a[1]}, {a[2], a[3]}, qa, pa);
        chart_map(spec, {b[0], b[1]}, {b[2], b[3]}, qb, pb);
        cols[i] = {(qa[0] - qb[0]) / (2 * h), (qa[1] - qb[1]) / (2 * h), (pa[0] - pb[0]) / (2 * h),
                   (pa[1] - pb[1]) / (2 * h)};
    }
    auto omega = [](const Vec4& u, const Vec4& v) {
        return u[0] * v[2] - v[0] * u[2] + u[1] * v[3] - v[1] * u[3];
    };
    double worst = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Vec4 ei{}, ej{};
            ei[i] = 1;
            ej[j] = 1;
            worst = std::max(worst, std::abs(omega(ei, ej) - omega(cols[i], cols[j])));
        }
    return worst;
}

SampleSet sample_regularized_surface(const RegularizedSurfaceSpec& spec, int count,
                                     std::uint64_t seed) {
    if (count < 1) throw DomainError("sample count must be >= 1");
    auto f = [&](const Vec4& v) {
        return regularized_hamiltonian(spec, {v[0], v[1]}, {v[2], v[3]});
    };
    SampleSet out;
    out.points.reserve(static_cast<std::size_t>(count) + 2);
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        const Vec4 xi = rng.unit4();
        double lo = 0, hi = 0;
        bool bracketed = false;
        for (double t = 0.05; t <= 10.0; t += 0.05) {
            if (f(t * xi) > 0) {
                hi = t;
                bracketed = true;
                break;
            }
            lo = t;
        }
        if (!bracketed) {
            ++out.skipped;
            continue;
        }
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (f(mid * xi) < 0 ? lo : hi) = mid;
        }
        out.points.push_back((0.5 * (lo + hi)) * xi);
    }
    // collision circle: K(0, w) = |w|^2/32 - m_p/2
    const double wc = 4.0 * std::sqrt(spec.primary_mass);
    out.points.push_back({0, 0, wc, 0});
    out.points.push_back({0, 0, 0, wc});
    return out;
}

namespace {

void fd_gradient(const std::function<double(const Vec4&)>& fn, const Vec4& p, double h, Vec4& g) {
    for (int i = 0; i < 4; ++i) {
        Vec4 a = p, b = p;
        a[i] += h;
        b[i] -= h;
        g[i] = (fn(a) - fn(b)) / (2 * h);
    }
}

Mat4 fd_hessian(const std::function<double(const Vec4&)>& fn, const Vec4& p, double h) {
    Mat4 m{};
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            Vec4 pp = p, pm = p, mp = p, mm = p;
            pp[i] += h;
            pp[j] += h;
            pm[i] += h;
            pm[j] -= h;
            mp[i] -= h;
            mp[j] += h;
            mm[i] -= h;
            mm[j] -= h;
            m[i][j] = m[j][i] = (fn(pp) - fn(pm) - fn(mp) + fn(mm)) / (4 * h * h);
        }
    return m;
}

}  // namespace

Diagnostics tangential_diagnostics(const std::function<double(const Vec4&)>& fn, const Vec4& point,
                                   double h) {
    Vec4 grad;
    fd_gradient(fn, point, h, grad);
    if (norm(grad) <= kGradSkipTol)
        throw DegenerateFrameError("gradient below the frame threshold");

    const Mat4 h1 = fd_hessian(fn, point, h);
    const Mat4 h2 = fd_hessian(fn, point, h / 2);
    double scale = 0, change = 0;
    Mat4 hess{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            scale = std::max(scale, std::abs(h2[i][j]));
            change = std::max(change, std::abs(h2[i][j] - h1[i][j]));
            hess[i][j] = (4 * h2[i][j] - h1[i][j]) / 3.0;  // Richardson step
        }

    const convexity::TangentFrame fr = convexity::tangent_frame({grad});
    const std::array<const Vec4*, 3> v{&fr.v1, &fr.v2, &fr.v3};
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) s += (*v[i])[k] * hess[k][l] * (*v[j])[l];
            m[i][j] = s;
        }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const double s = 0.5 * (m[i][j] + m[j][i]);
            m[i][j] = m[j][i] = s;
        }

    Diagnostics d;
    d.det = det3(m);
    const double gn2 = dot(grad, grad);
    for (auto& row : m)
        for (auto& x : row) x /= gn2;
    d.min_eig = jacobi_eigenvalues(m)[0];
    d.halving_ok = change <= 0.01 * std::max(scale, 1e-12);
    return d;
}

Diagnostics tangential_diagnostics(const RegularizedSurfaceSpec& spec, const Vec4& point,
                                   double h) {
    return tangential_diagnostics(
        [&](const Vec4& v) { return regularized_hamiltonian(spec, {v[0], v[1]}, {v[2], v[3]}); },
        point, h);
}

namespace {

struct SurfaceScan {
    int samples = 0;
    int skipped = 0;
    double min_eig = 0;
    double min_det = 0;
};

SurfaceScan scan_surface(const RegularizedSurfaceSpec& spec, int count, std::uint64_t seed,
                         unsigned jobs) {
    const SampleSet set = sample_regularized_surface(spec, count, seed);
    const std::size_t n = set.points.size();
    struct Point {
        double min_eig, det;
        bool skipped;
    };
    std::vector<Point> res(n);
    parallel_for(n, jobs, [&](std::size_t i) {
        try {
            const Diagnostics d = tangential_diagnostics(spec, set.points[i]);
            res[i] = {d.min_eig, d.det, false};
        } catch (const DegenerateFrameError&) {
            res[i] = {0, 0, true};
        }
    });
    SurfaceScan s;
    s.skipped = set.skipped;
    bool first = true;
    for (const auto& r : res) {
        if (r.skipped) {
            ++s.skipped;
            continue;
        }
        ++s.samples;
        if (first || r.min_eig < s.min_eig) s.min_eig = r.min_eig;
        if (first || r.det < s.min_det) s.min_det = r.det;
        first = false;
    }
    return s;
}

}  // namespace

ScanTable scan_grid(const std::vector<double>& mu_list, const std::vector<double>& fractions,
                    int count, std::uint64_t seed, Primary primary, unsigned jobs) {
    ScanTable table;
    for (double mu : mu_list) {
        const double c1 = lagrange_L1(mu).critical_value;
        const double c_ref = c1 - 3.0;
        for (double frac : fractions) {
            ScanRow row;
            row.mu = mu;
            row.c_crit = c1;
            row.fraction = frac;
            row.c = c_ref + frac * (c1 - c_ref);
            const RegularizedSurfaceSpec spec(mu, row.c, primary);
            const SurfaceScan s = scan_surface(spec, count, seed, jobs);
            row.samples = s.samples;
            row.skipped = s.skipped;
            row.min_eig = s.min_eig;
            row.min_det = s.min_det;
            row.pass = s.min_eig > 0;
            table.rows.push_back(row);
        }
    }
    return table;
}

ControlReport direct_lc_control(const std::vector<double>& energies, int count,
                                std::uint64_t seed, unsigned jobs) {
    ControlReport report;
    for (double c : energies) {
        ControlRow row;
        row.c = c;
        const RegularizedSurfaceSpec spec(0.0, c);
        const SurfaceScan s = scan_surface(spec, count, seed, jobs);
        row.samples = s.samples;
        row.skipped = s.skipped;
        row.min_eig = s.min_eig;
        row.min_det = s.min_det;
        row.convex = s.min_eig > 0;
        const auto cert = convexity::certify_convexity(c, count, seed, jobs);
        row.ls_min_eig = cert.min_eig;
        row.ls_pass = cert.pass;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace rkconvex::r3bp
