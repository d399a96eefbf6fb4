#include "rkconvex/symbolic.hpp"

#include <sstream>

#include "rkconvex/errors.hpp"

namespace rkconvex::convexity {

namespace {

using sp::Rational;
using sp::SparsePoly;

SparsePoly make_term(long coeff, int ez1, int ez2, int ew1, int ew2, int ec) {
    SparsePoly::Term t;
    t.coeff = coeff;
    t.mono.e = {static_cast<std::uint16_t>(ez1), static_cast<std::uint16_t>(ez2),
                static_cast<std::uint16_t>(ew1), static_cast<std::uint16_t>(ew2),
                static_cast<std::uint16_t>(ec)};
    return SparsePoly::from_terms({t});
}

/// The four cubic quadruple components, in the order (z1,z2,w1,w2).
SparsePoly g_display(int i) {
    switch (i) {
        case 0:
            return make_term(-4, 0, 0, 2, 1, 0) + make_term(16, 1, 1, 1, 0, 0) +
                   make_term(-4, 0, 0, 0, 3, 0) + make_term(-20, 2, 0, 0, 1, 0) +
                   make_term(-4, 0, 2, 0, 1, 0) + make_term(-8, 1, 0, 0, 0, 1);
        case 1:
            return make_term(4, 0, 0, 3, 0, 0) + make_term(4, 0, 0, 1, 2, 0) +
                   make_term(4, 2, 0, 1, 0, 0) + make_term(20, 0, 2, 1, 0, 0) +
                   make_term(-16, 1, 1, 0, 1, 0) + make_term(-8, 0, 1, 0, 0, 1);
        case 2:
            return make_term(20, 0, 1, 2, 0, 0) + make_term(-16, 1, 0, 1, 1, 0) +
                   make_term(4, 0, 1, 0, 2, 0) + make_term(4, 2, 1, 0, 0, 0) +
                   make_term(4, 0, 3, 0, 0, 0) + make_term(-8, 0, 0, 1, 0, 1);
        case 3:
            return make_term(-4, 1, 0, 2, 0, 0) + make_term(16, 0, 1, 1, 1, 0) +
                   make_term(-20, 1, 0, 0, 2, 0) + make_term(-4, 3, 0, 0, 0, 0) +
                   make_term(-4, 1, 2, 0, 0, 0) + make_term(-8, 0, 0, 0, 1, 1);
    }
    throw DomainError("g_display index");
}

/// Factor polynomials in the chart variables, given a and b.
std::array<SparsePoly, 4> factor_polys(const SparsePoly& a, const SparsePoly& b) {
    const SparsePoly c = SparsePoly::variable(Var::C);
    const SparsePoly f1 = c * Rational(-2) + a + b * Rational(4);
    const SparsePoly f2 = c * Rational(-2) - a + b * Rational(4);
    const SparsePoly f3 = c * c * c * Rational(-4) + b * c * c * Rational(28) -
                          (b * b * Rational(88) - a * a * Rational(7)) * c +
                          b * b * b * Rational(96) - a * a * b * Rational(15);
    const SparsePoly f4 =
        c * c * Rational(4) - b * c * Rational(24) + a * a + b * b * Rational(32);
    return {f1, f2, f3, f4};
}

/// N in the (a, c) slots (variable 0 as a, variable 4 as c).
SparsePoly numerator_ac() {
    return make_term(12, 4, 0, 0, 0, 2) + make_term(-2, 8, 0, 0, 0, 1) +
           make_term(-15, 6, 0, 0, 0, 0) + make_term(14, 2, 0, 0, 0, 1) +
           make_term(6, 0, 0, 0, 0, 0);
}

SymbolicArtifacts build_artifacts() {
    SymbolicArtifacts art;
    const SparsePoly z1 = SparsePoly::variable(Var::Z1), z2 = SparsePoly::variable(Var::Z2);
    const SparsePoly w1 = SparsePoly::variable(Var::W1), w2 = SparsePoly::variable(Var::W2);
    const SparsePoly c = SparsePoly::variable(Var::C);
    art.a = z1 * z1 + z2 * z2 + w1 * w1 + w2 * w2;
    art.b = w1 * z2 - w2 * z1;
    art.F = SparsePoly::constant(-1) + (art.b * Rational(4) - c * Rational(2)) * art.a * art.a;
    for (int i = 0; i < 4; ++i) {
        art.dF[i] = art.F.diff(i);
        auto q = art.dF[i].div_exact(art.a);
        if (!q) throw ConstructionError("a does not divide a partial of F");
        art.g[i] = *q;
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) art.hess[i][j] = art.dF[i].diff(j);

    const auto& g = art.g;
    const std::array<std::array<SparsePoly, 4>, 3> frame{{
        {-g[1], g[0], g[3], -g[2]},
        {-g[2], -g[3], g[0], g[1]},
        {-g[3], g[2], -g[1], g[0]},
    }};
    sp::PolyMatrix3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            SparsePoly s;
            for (int k = 0; k < 4; ++k) {
                SparsePoly row;
                for (int l = 0; l < 4; ++l) row = row + art.hess[k][l] * frame[j][l];
                s = s + frame[i][k] * row;
            }
            m.entry[i][j] = s;
        }
    art.DH = sp::poly_det3(m);
    art.N_ac = numerator_ac();
    return art;
}

}  // namespace

const SymbolicArtifacts& build_symbolic() {
    static const SymbolicArtifacts art = build_artifacts();
    return art;
}

FactorizationOutcome verify_factorization() {
    const auto& art = build_symbolic();
    const auto f = factor_polys(art.a, art.b);
    SparsePoly a6 = art.a;
    for (int i = 0; i < 5; ++i) a6 = a6 * art.a;
    const SparsePoly rhs = a6 * f[0] * f[1] * f[2] * (f[3] * f[3]) * Rational(524288);
    const SparsePoly diff = art.DH - rhs;
    if (diff.is_zero()) return {FactorizationOutcome::ExactIdentity, std::nullopt};
    if (pseudo_rem_linear(diff, art.F, Var::C).is_zero())
        return {FactorizationOutcome::IdentityModuloF, std::nullopt};

    // the sides differ on the surface: exhibit a rational on-shell witness
    for (long z1n = -2; z1n <= 2; ++z1n)
        for (long z2n = -2; z2n <= 2; ++z2n)
            for (long w1n = -2; w1n <= 2; ++w1n)
                for (long w2n = -2; w2n <= 2; ++w2n) {
                    if (z1n == 0 && z2n == 0 && w1n == 0 && w2n == 0) continue;
                    auto half = [](long n) {
                        Rational r(n, 2);
                        r.canonicalize();
                        return r;
                    };
                    std::array<Rational, sp::kNumVars> pt{half(z1n), half(z2n), half(w1n),
                                                          half(w2n), 0};
                    const Rational av = art.a.eval(pt), bv = art.b.eval(pt);
                    // on-shell energy: F = 0 <=> c = (4 b a^2 - 1) / (2 a^2)
                    pt[Var::C] = (4 * bv * av * av - 1) / (2 * av * av);
                    if (diff.eval(pt) != 0) {
                        std::ostringstream os;
                        os << "(z1,z2,w1,w2,c) = (" << pt[0] << "," << pt[1] << "," << pt[2] << ","
                           << pt[3] << "," << pt[4] << ")";
                        return {FactorizationOutcome::Failure, os.str()};
                    }
                }
    return {FactorizationOutcome::Failure, std::string("no rational witness in the search grid")};
}

std::array<IdentityCheck, 8> exact_identity_checks() {
    const auto& art = build_symbolic();
    std::array<IdentityCheck, 8> out;

    static const std::array<std::string, sp::kNumVars> chart_names{"z1", "z2", "w1", "w2", "c"};
    static const std::array<std::string, sp::kNumVars> abc_names{"a", "b", "x3", "x4", "c"};

    for (int i = 0; i < 4; ++i) {
        const SparsePoly res = art.dF[i] - art.a * g_display(i);
        out[i] = {"dF/dx" + std::to_string(i + 1) + " == a*g" + std::to_string(i + 1),
                  res.is_zero(), res.to_string(chart_names)};
    }

    // ring with slots (a, b, _, _, c): a and b as independent variables
    const SparsePoly A = SparsePoly::variable(0), B = SparsePoly::variable(1);
    const SparsePoly Cv = SparsePoly::variable(Var::C);
    const auto fab = factor_polys(A, B);

    {
        const SparsePoly lhs = fab[3] - (B * Rational(3) - Cv) * (B * Rational(3) - Cv) * Rational(4);
        const SparsePoly res = lhs - (A * A - B * B * Rational(4));
        out[4] = {"f4 - 4(3b-c)^2 == a^2 - 4b^2", res.is_zero(), res.to_string(abc_names)};
    }
    {
        // substitute b = (1 + 2 c a^2) / (4 a^2) into f3 and clear (4 a^2)^3;
        // the result must equal 16 N(a, c)
        const SparsePoly b_num = SparsePoly::constant(1) + Cv * A * A * Rational(2);
        const SparsePoly b_den = A * A * Rational(4);
        SparsePoly cleared;
        for (unsigned k = 0; k <= 3; ++k) {
            SparsePoly term = fab[2].coeff_of(1, k);
            for (unsigned j = 0; j < k; ++j) term = term * b_num;
            for (unsigned j = 0; j < 3 - k; ++j) term = term * b_den;
            cleared = cleared + term;
        }
        const SparsePoly res = cleared - art.N_ac * Rational(16);
        out[5] = {"(4a^2)^3 * f3|onshell == 16 N(a,c)", res.is_zero(), res.to_string(abc_names)};
    }
    {
        const SparsePoly lhs = art.N_ac.substitute(Var::C, Rational(-3, 2));
        const SparsePoly a2 = A * A;
        const SparsePoly rhs = (a2 - SparsePoly::constant(1)) * (a2 - SparsePoly::constant(1)) *
                               (a2 - SparsePoly::constant(1)) * (a2 - SparsePoly::constant(2)) *
                               Rational(3);
        const SparsePoly res = lhs - rhs;
        out[6] = {"N(a,-3/2) == 3(a^2-1)^3(a^2-2)", res.is_zero(), res.to_string(abc_names)};
    }
    {
        // N at the parabola axis c* = (a^6 - 7)/(12 a^2), cleared by (12 a^2)^2
        const SparsePoly c_num = make_term(1, 6, 0, 0, 0, 0) - SparsePoly::constant(7);
        const SparsePoly c_den = A * A * Rational(12);
        SparsePoly cleared;
        for (unsigned j = 0; j <= 2; ++j) {
            SparsePoly term = art.N_ac.coeff_of(Var::C, j);
            for (unsigned k = 0; k < j; ++k) term = term * c_num;
            for (unsigned k = 0; k < 2 - j; ++k) term = term * c_den;
            cleared = cleared + term;
        }
        const SparsePoly rhs =
            (SparsePoly::constant(23) - make_term(1, 12, 0, 0, 0, 0) -
             make_term(166, 6, 0, 0, 0, 0)) *
            A * A * A * A * Rational(12);
        const SparsePoly res = cleared - rhs;
        out[7] = {"144 a^4 N(a,c*) == 12 a^4 (-a^12 - 166 a^6 + 23)", res.is_zero(),
                  res.to_string(abc_names)};
    }
    return out;
}

sp::Rational axis_value_at_case_boundary() {
    const Rational a2(7, 18);
    const Rational a6 = a2 * a2 * a2;
    const Rational a12 = a6 * a6;
    return (-a12 - 166 * a6 + 23) / 12;
}

bool vanishes_on_degree_grid(const sp::SparsePoly& p) {
    std::array<int, sp::kNumVars> deg;
    for (int v = 0; v < sp::kNumVars; ++v) deg[v] = std::max(0, p.degree_in(v));
    std::array<Rational, sp::kNumVars> pt{};
    std::array<int, sp::kNumVars> idx{};
    for (;;) {
        for (int v = 0; v < sp::kNumVars; ++v) pt[v] = idx[v];
        if (p.eval(pt) != 0) return false;
        int v = 0;
        while (v < sp::kNumVars && ++idx[v] > deg[v]) idx[v++] = 0;
        if (v == sp::kNumVars) return true;
    }
}

}  // namespace rkconvex::convexity
