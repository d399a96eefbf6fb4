#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rkconvex/monomial.hpp"

namespace rkconvex::poly {

using Rational = mpq_class;

/// r^e for e >= 0.
Rational rat_pow(const Rational& r, unsigned e);

/// Exact sparse multivariate polynomial over arbitrary-precision rationals,
/// in the fixed 5-variable ring. Terms are kept in canonical form: sorted
/// descending by graded lex order, no zero coefficients. Values are
/// immutable once built; every operation returns a fresh polynomial, so
/// concurrent reads are safe.
class SparsePoly {
  public:
    struct Term {
        Monomial mono;
        Rational coeff;
    };

    SparsePoly() = default;

    /// Constant polynomial.
    static SparsePoly constant(const Rational& r);
    /// The variable with the given index (0..4).
    static SparsePoly variable(int var);
    /// coeff * x_var^exp
    static SparsePoly term(const Rational& coeff, int var, unsigned exp);
    /// From an arbitrary term list (normalizes: sorts, merges, drops zeros).
    static SparsePoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Canonical form makes equality structural.
    bool operator==(const SparsePoly& o) const;
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator*(const Rational& r) const;

    /// Exact partial derivative with respect to variable var (0..4).
    SparsePoly diff(int var) const;

    /// Exact evaluation at a rational point (all 5 coordinates).
    Rational eval(const std::array<Rational, kNumVars>& point) const;

    /// Double-precision evaluation (used by cross-checks only; the exact
    /// suite never rounds).
    double eval_double(const std::array<double, kNumVars>& point) const;

    /// Substitute an exact constant for one variable.
    SparsePoly substitute(int var, const Rational& value) const;

    /// Coefficient of x_var^k, as a polynomial in the remaining variables.
    SparsePoly coeff_of(int var, unsigned k) const;

    int total_degree() const;                 // -1 for the zero polynomial
    int degree_in(int var) const;             // -1 for the zero polynomial
    /// Total degree counting only the listed variables.
    int total_degree_in(std::initializer_list<int> vars) const;

    /// Exact division: returns quotient iff divisor divides exactly.
    std::optional<SparsePoly> div_exact(const SparsePoly& divisor) const;

    /// Textual form: terms in canonical (descending) order, each printed as
    /// num/den*z1^e1*z2^e2*w1^e3*w2^e4*c^e5, joined by " + ". Alternative
    /// variable names may be supplied for rings reinterpreting the slots.
    std::string to_string(const std::array<std::string, kNumVars>& names = {"z1", "z2", "w1",
                                                                            "w2", "c"}) const;

  private:
    // invariant: sorted descending in grlex order, coefficients nonzero
    std::vector<Term> terms_;
};

/// Pseudo-remainder of p by a divisor of degree exactly 1 in variable var:
/// returns r with lc(d,var)^k * p = q*d + r and deg_var(r) = 0. Throws
/// DegreeError if d is not linear in var.
SparsePoly pseudo_rem_linear(const SparsePoly& p, const SparsePoly& d, int var);

/// 3x3 matrix of polynomials (the restricted-Hessian carrier).
struct PolyMatrix3 {
    std::array<std::array<SparsePoly, 3>, 3> entry;
};

/// Exact determinant by cofactor expansion along the first row.
SparsePoly poly_det3(const PolyMatrix3& m);

}  // namespace rkconvex::poly
