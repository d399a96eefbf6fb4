#pragma once

#include <array>
#include <optional>
#include <string>

#include "rkconvex/sparse_poly.hpp"

namespace rkconvex::convexity {

namespace sp = rkconvex::poly;

/// Variable indices of the chart ring (z1, z2, w1, w2, c).
enum Var : int { Z1 = 0, Z2 = 1, W1 = 2, W2 = 3, C = 4 };

/// Exact polynomial forms of every object entering the determinant
/// computation. Built once, immutable afterwards; safe to share.
struct SymbolicArtifacts {
    sp::SparsePoly a;       // |w|^2 + |z|^2
    sp::SparsePoly b;       // w1 z2 - w2 z1
    sp::SparsePoly F;       // -1 + 4 b a^2 - 2 c a^2
    std::array<sp::SparsePoly, 4> dF;            // partials in (z1,z2,w1,w2)
    std::array<sp::SparsePoly, 4> g;             // dF = a * g, by exact division
    std::array<std::array<sp::SparsePoly, 4>, 4> hess;
    sp::SparsePoly DH;      // det of the frame-conjugated Hessian
    sp::SparsePoly N_ac;    // on-shell numerator, in the (a, c) slots
};

/// Builds (or returns the cached) artifacts. Throws ConstructionError if a
/// fails to divide some partial of F exactly.
const SymbolicArtifacts& build_symbolic();

/// Outcome of comparing DH with 524288 a^6 f1 f2 f3 f4^2 expanded in the
/// chart variables.
struct FactorizationOutcome {
    enum Kind { ExactIdentity, IdentityModuloF, Failure } kind;
    /// Set on Failure: a rational on-shell point where the sides differ,
    /// rendered in the polynomial text format's coordinate order.
    std::optional<std::string> witness;

    std::string name() const {
        switch (kind) {
            case ExactIdentity: return "ExactIdentity";
            case IdentityModuloF: return "IdentityModuloF";
            default: return "Failure";
        }
    }
};

FactorizationOutcome verify_factorization();

/// The exact identities of the factor analysis, each reported with a name
/// and whether the polynomial difference vanished.
struct IdentityCheck {
    std::string name;
    bool holds;
    std::string residual;  // textual polynomial, "0/1" when holds
};

/// All exact identity checks:
///  - dF_i == a * g_i for the four hardcoded cubic g polynomials
///  - f4 - 4(3b-c)^2 == a^2 - 4 b^2
///  - denominator-cleared on-shell substitution of f3 equals N(a,c)
///  - N(a,-3/2) == 3 (a^2-1)^3 (a^2-2)
///  - denominator-cleared N at the parabola axis equals (-a^12-166 a^6+23)/12
std::array<IdentityCheck, 8> exact_identity_checks();

/// Exact rational value of the axis polynomial (-a^12 - 166 a^6 + 23)/12 at
/// a^2 = 7/18 (approximately 1.1028).
sp::Rational axis_value_at_case_boundary();

/// Deterministic identity test: evaluates p on the integer grid
/// {0,..,D_v}^5 with D_v = per-variable degree of p, and reports whether
/// every value is zero (equivalent to p == 0). Used as the independent
/// oracle for the identity suite.
bool vanishes_on_degree_grid(const sp::SparsePoly& p);

}  // namespace rkconvex::convexity
