#include "rkconvex/kepler.hpp"

#include <cmath>
#include <complex>

#include "rkconvex/errors.hpp"

namespace rkconvex::kepler {

using cplx = std::complex<double>;

namespace {

cplx as_complex(const Vec2& v) { return {v[0], v[1]}; }
Vec2 as_vec(const cplx& z) { return {z.real(), z.imag()}; }

void require_offcenter(const Vec2& q) {
    if (q[0] == 0 && q[1] == 0) throw DomainError("position at the origin");
}

}  // namespace

double rkp_hamiltonian(const PlanarState& st) {
    require_offcenter(st.q);
    return 0.5 * dot(st.p, st.p) - 1.0 / norm(st.q) + st.p[0] * st.q[1] - st.p[1] * st.q[0];
}

double effective_potential(const Vec2& q) {
    require_offcenter(q);
    const double r = norm(q);
    return -1.0 / r - 0.5 * r * r;
}

double kepler_energy(const PlanarState& st) {
    require_offcenter(st.q);
    return 0.5 * dot(st.p, st.p) - 1.0 / norm(st.q);
}

double hill_bounded_radius(double c) {
    if (!(c < rkp_critical_value())) throw DomainError("energy not below the critical value");
    // U(rho) = -1/rho - rho^2/2 rises from -inf to U(1) = -3/2 on (0,1]
    auto u = [](double rho) { return -1.0 / rho - 0.5 * rho * rho; };
    double lo = 1e-300, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (u(mid) < c ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

SphereCotangent ligon_schaaf(const PlanarState& st) {
    require_offcenter(st.q);
    const double K = kepler_energy(st);
    if (!(K < 0)) throw DomainError("state has non-negative Kepler energy");
    const double nu = std::sqrt(-2.0 * K);
    const double qn = norm(st.q);
    const double qp = dot(st.q, st.p);
    const double phi = -nu * qp;
    const Vec3 u{nu * qn * st.p[0], nu * qn * st.p[1], dot(st.p, st.p) * qn - 1.0};
    const Vec3 v{-st.q[0] / qn + qp * st.p[0], -st.q[1] / qn + qp * st.p[1], phi};
    const double cp = std::cos(phi), sp = std::sin(phi);
    SphereCotangent out;
    out.r = cp * u + sp * v;
    out.s = (1.0 / nu) * ((-sp) * u + cp * v);
    return out;
}

SphereCotangent stereo_project(const StereoState& st) {
    const double X = dot(st.x, st.x);
    const double s3 = dot(st.x, st.y);
    SphereCotangent out;
    out.s = {0.5 * (X + 1.0) * st.y[0] - s3 * st.x[0], 0.5 * (X + 1.0) * st.y[1] - s3 * st.x[1],
             s3};
    // r3 is pinned by |r| = 1 and r.s = 0
    out.r = {2.0 * st.x[0] / (X + 1.0), 2.0 * st.x[1] / (X + 1.0), (X - 1.0) / (X + 1.0)};
    return out;
}

StereoState stereo_unproject(const SphereCotangent& rs) {
    if (!(rs.r[2] < 1.0)) throw CollisionError("unprojection at the north pole");
    const double f = 1.0 - rs.r[2];
    StereoState out;
    out.x = {rs.r[0] / f, rs.r[1] / f};
    out.y = {f * (rs.s[0] + rs.s[2] * out.x[0]), f * (rs.s[1] + rs.s[2] * out.x[1])};
    return out;
}

StereoState levi_civita(const LCState& lc) {
    const cplx z = as_complex(lc.z), w = as_complex(lc.w);
    if (z == cplx{0, 0}) throw DomainError("squaring chart evaluated at z = 0");
    StereoState out;
    out.x = as_vec(w / std::conj(z));
    out.y = as_vec(2.0 * z * z);
    return out;
}

LCState lc_inverse(const StereoState& st, Branch branch) {
    const cplx y = as_complex(st.y);
    if (y == cplx{0, 0}) throw DomainError("chart inverse at y = 0");
    cplx z = std::sqrt(y / 2.0);
    if (branch == Branch::Minus) z = -z;
    LCState out;
    out.z = as_vec(z);
    out.w = as_vec(as_complex(st.x) * std::conj(z));
    return out;
}

int resolved_sigma() {
    static const int sigma = [] {
        // exact sample: the circular state q=(1,0), p=(0,1)
        const PlanarState st{{1.0, 0.0}, {0.0, 1.0}};
        const double h = rkp_hamiltonian(st);
        const SphereCotangent rs = ligon_schaaf(st);
        const double delaunay = -1.0 / (2.0 * dot(rs.s, rs.s));
        const double ang = rs.r[0] * rs.s[1] - rs.r[1] * rs.s[0];
        if (std::abs(delaunay + ang - h) < 1e-9) return +1;
        if (std::abs(delaunay - ang - h) < 1e-9) return -1;
        throw ConstructionError("angular sign resolution failed on the exact sample");
    }();
    return sigma;
}

LCState compose_embedding(const PlanarState& st, Branch branch) {
    const SphereCotangent rs = ligon_schaaf(st);
    const StereoState xy = stereo_unproject(rs);
    LCState lc = lc_inverse(xy, branch);
    if (resolved_sigma() == -1) {
        lc = LCState{{lc.z[1], lc.z[0]}, {lc.w[1], lc.w[0]}};
    }
    return lc;
}

SurfaceInvariants surface_invariants(const LCState& lc) {
    if (lc.z[0] == 0 && lc.z[1] == 0 && lc.w[0] == 0 && lc.w[1] == 0)
        throw DomainError("chart invariants at the origin");
    return {dot(lc.z, lc.z) + dot(lc.w, lc.w), lc.w[0] * lc.z[1] - lc.w[1] * lc.z[0]};
}

double pullback_hamiltonian(const LCState& lc) {
    const auto [a, b] = surface_invariants(lc);
    return -1.0 / (2.0 * a * a) + 2.0 * b;
}

namespace {

// omega(u, v) for the form weight * sum d(pos_i) ^ d(mom_i); coordinates are
// laid out as n "first-block" entries followed by n "second-block" entries,
// and mom_first says which block holds the momenta.
template <std::size_t Dim>
double two_form(const std::array<double, Dim>& u, const std::array<double, Dim>& v, double weight,
                bool mom_first) {
    constexpr std::size_t n = Dim / 2;
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t pos = mom_first ? n + i : i;
        const std::size_t mom = mom_first ? i : n + i;
        s += u[pos] * v[mom] - v[pos] * u[mom];
    }
    return weight * s;
}

template <typename F>
double defect_of(F&& eval, const Vec4& p, double h, double src_weight, bool src_mom_first,
                 double tgt_weight, bool tgt_mom_first) {
    using Out = decltype(eval(p));
    std::array<Out, 4> jac_cols;
    for (int i = 0; i < 4; ++i) {
        Vec4 a = p, b = p;
        a[i] += h;
        b[i] -= h;
        const Out fa = eval(a), fb = eval(b);
        for (std::size_t k = 0; k < fa.size(); ++k) jac_cols[i][k] = (fa[k] - fb[k]) / (2 * h);
    }
    double worst = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Vec4 ei{}, ej{};
            ei[i] = 1.0;
            ej[j] = 1.0;
            const double src = two_form(ei, ej, src_weight, src_mom_first);
            const double tgt = two_form(jac_cols[i], jac_cols[j], tgt_weight, tgt_mom_first);
            worst = std::max(worst, std::abs(src - tgt));
        }
    return worst;
}

std::array<double, 6> eval_ls(const Vec4& v) {
    const SphereCotangent rs = ligon_schaaf({{v[0], v[1]}, {v[2], v[3]}});
    return {rs.r[0], rs.r[1], rs.r[2], rs.s[0], rs.s[1], rs.s[2]};
}

std::array<double, 4> eval_lc(const Vec4& v) {
    const StereoState xy = levi_civita({{v[0], v[1]}, {v[2], v[3]}});
    return {xy.x[0], xy.x[1], xy.y[0], xy.y[1]};
}

std::array<double, 4> eval_composed(const Vec4& v) {
    const LCState lc = compose_embedding({{v[0], v[1]}, {v[2], v[3]}}, Branch::Plus);
    return {lc.z[0], lc.z[1], lc.w[0], lc.w[1]};
}

}  // namespace

double symplecticity_defect(MapId map, const Vec4& point, double h) {
    switch (map) {
        case MapId::LigonSchaaf:
            // source sum dq^dp, target sum dr^ds restricted to T*S^2
            return defect_of(eval_ls, point, h, 1.0, false, 1.0, false);
        case MapId::LeviCivita:
            // source 4*sum dw_i^dz_i on (z1,z2,w1,w2); target sum dx_i^dy_i
            return defect_of(eval_lc, point, h, lc_symplectic_weight, true, 1.0, false);
        case MapId::Composed:
            return defect_of(eval_composed, point, h, 1.0, false, lc_symplectic_weight, true);
        case MapId::Identity:
            return defect_of([](const Vec4& v) { return v; }, point, h, 1.0, false, 1.0, false);
    }
    throw DomainError("unknown map id");
}

PlanarState sample_negative_energy(Rng& rng, double kmax) {
    for (;;) {
        const Vec2 dir = rng.unit2();
        const double rad = rng.uniform(0.3, 2.0);
        const Vec2 q{rad * dir[0], rad * dir[1]};
        const Vec2 p{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        if (dot(p, p) > 4.0) continue;
        const PlanarState st{q, p};
        if (kepler_energy(st) <= kmax) return st;
    }
}

}  // namespace rkconvex::kepler
