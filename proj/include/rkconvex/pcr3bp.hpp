#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rkconvex/linalg.hpp"

namespace rkconvex::r3bp {

/// Rotating-frame Hamiltonian of the planar circular restricted three-body
/// problem with primaries E = (-mu, 0) of mass 1-mu and M = (1-mu, 0) of
/// mass mu:
///   H = |p|^2/2 - (1-mu)/|q-E| - mu/|q-M| + (p1 q2 - p2 q1).
double r3bp_hamiltonian(double mu, const Vec2& q, const Vec2& p);

/// Effective potential -(1-mu)/|q-E| - mu/|q-M| - |q|^2/2.
double r3bp_effective_potential(double mu, const Vec2& q);

/// The interior collinear critical point of the effective potential and
/// its value (the first critical energy of the problem).
struct LagrangePoint {
    double x;
    double critical_value;
};
LagrangePoint lagrange_L1(double mu);

enum class Primary { Heavy, Light };

/// One regularized energy surface: the squaring chart centered at the
/// chosen primary, Q = primary + 2 z^2, with the exactly canonical momentum
/// P = w / (4 conj(z)), and the regularized function
///   K(z, w) = |z|^2 (H_mu(Q, P) - c),
/// which extends smoothly over z = 0. mu = 0 (single primary at the
/// origin) is the direct-squaring rotating Kepler surface used as the
/// negative control.
struct RegularizedSurfaceSpec {
    double mu = 0;
    double c = 0;
    Primary primary = Primary::Heavy;

    // derived: position/mass of the chart primary and of the other one
    double primary_x = 0, primary_mass = 1;
    double other_x = 0, other_mass = 0;

    RegularizedSurfaceSpec(double mu, double c, Primary primary = Primary::Heavy);
};

/// K(z, w), in the form regular at z = 0.
double regularized_hamiltonian(const RegularizedSurfaceSpec& spec, const Vec2& z, const Vec2& w);

/// The chart map (z, w) -> (Q, P); used by the canonicity test. Throws at
/// z = 0 (the momentum has no chart-free meaning there).
void chart_map(const RegularizedSurfaceSpec& spec, const Vec2& z, const Vec2& w, Vec2& q, Vec2& p);

/// Maximum canonical-two-form mismatch of the chart at a point, central
/// differences of step h. Source form sum dz^dw, target sum dQ^dP.
double chart_symplecticity_defect(const RegularizedSurfaceSpec& spec, const Vec4& point, double h);

struct SampleSet {
    std::vector<Vec4> points;  // on-shell to 1e-12 (|K| at the bisection root)
    int skipped = 0;           // rays with no bracket, or degenerate gradients
};

/// Seeded radial sampling of the bounded component around the chart
/// primary: rays from the origin (K(0,0) < 0), first sign change bracketed
/// then bisected. Two collision-circle points (z = 0) are appended.
SampleSet sample_regularized_surface(const RegularizedSurfaceSpec& spec, int count,
                                     std::uint64_t seed);

/// Finite-difference tangential diagnostics of a scalar function on R^4 at
/// an on-shell point: gradient and Hessian by central differences (step h
/// and h/2, Richardson-combined), quaternion frame from the gradient.
/// min_eig is for the frame-conjugated Hessian scaled by |grad|^-2; det is
/// unscaled. halving_ok reports the step-halving acceptance (< 1% entry
/// change).
struct Diagnostics {
    double min_eig = 0;
    double det = 0;
    bool halving_ok = true;
};
Diagnostics tangential_diagnostics(const std::function<double(const Vec4&)>& fn, const Vec4& point,
                                   double h = 1e-5);

Diagnostics tangential_diagnostics(const RegularizedSurfaceSpec& spec, const Vec4& point,
                                   double h = 1e-5);

struct ScanRow {
    double mu = 0;
    double c_crit = 0;
    double c = 0;
    double fraction = 0;
    int samples = 0;
    int skipped = 0;
    double min_eig = 0;
    double min_det = 0;
    bool pass = false;
};

struct ScanTable {
    std::vector<ScanRow> rows;
};

/// One row per (mu, fraction): energy c = c_ref + fraction * (c1(mu) -
/// c_ref) with the deep anchor c_ref = c1(mu) - 3. Deterministic under the
/// seed and independent of the parallelism degree.
ScanTable scan_grid(const std::vector<double>& mu_list, const std::vector<double>& fractions,
                    int count, std::uint64_t seed, Primary primary = Primary::Heavy,
                    unsigned jobs = 0);

struct ControlRow {
    double c = 0;
    int samples = 0;
    int skipped = 0;
    double min_eig = 0;       // direct squaring chart, mu = 0
    double min_det = 0;
    bool convex = false;      // min_eig > 0
    double ls_min_eig = 0;    // the composed-regularization surface at the same c
    bool ls_pass = false;
};

struct ControlReport {
    std::vector<ControlRow> rows;
};

/// mu = 0 negative control: the direct squaring chart of the rotating
/// Kepler problem, scanned over the energies, side by side with the
/// composed-regularization surface diagnostics at the same energies.
ControlReport direct_lc_control(const std::vector<double>& energies, int count,
                                std::uint64_t seed, unsigned jobs = 0);

}  // namespace rkconvex::r3bp
