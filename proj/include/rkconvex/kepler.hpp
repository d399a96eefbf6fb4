#pragma once

#include <cstdint>

#include "rkconvex/linalg.hpp"
#include "rkconvex/rng.hpp"

namespace rkconvex::kepler {

/// Point of the planar phase space: position q (away from the origin) and
/// momentum p in rotating-frame coordinates.
struct PlanarState {
    Vec2 q;
    Vec2 p;
};

/// Point of T*S^2 embedded in R^3 x R^3: unit base point r and a cotangent
/// vector s with r.s = 0.
struct SphereCotangent {
    Vec3 r;
    Vec3 s;
};

/// Stereographic coordinates of T*S^2 minus the north pole: x is
/// momentum-like (the base point of the sphere chart), y position-like.
struct StereoState {
    Vec2 x;
    Vec2 y;
};

/// Point of the regularized chart, z and w read as complex numbers.
struct LCState {
    Vec2 z;
    Vec2 w;
};

enum class Branch : int { Plus = +1, Minus = -1 };

/// Rotating-frame Hamiltonian |p|^2/2 - 1/|q| + (p1 q2 - p2 q1).
double rkp_hamiltonian(const PlanarState& st);

/// Effective potential -1/|q| - |q|^2/2.
double effective_potential(const Vec2& q);

/// The unique critical value of the effective potential.
constexpr double rkp_critical_value() { return -1.5; }

/// Kepler (inertial-frame) energy |p|^2/2 - 1/|q|.
double kepler_energy(const PlanarState& st);

/// Radius of the bounded Hill component boundary: smallest positive root of
/// effective_potential(rho) = c, for c below the critical value. Always < 1.
double hill_bounded_radius(double c);

/// The regularizing map from negative-Kepler-energy states to T*S^2.
/// Output satisfies |r| = 1, r.s = 0, s != 0 and the Delaunay relation
/// -1/(2|s|^2) = kepler_energy.
SphereCotangent ligon_schaaf(const PlanarState& st);

/// Chart maps between stereographic coordinates and T*S^2 (a cotangent
/// lift; preserves the canonical forms exactly).
SphereCotangent stereo_project(const StereoState& st);
StereoState stereo_unproject(const SphereCotangent& rs);  // throws CollisionError at r3 = 1

/// The 2-to-1 squaring chart (z,w) -> (x = w / conj(z), y = 2 z^2) and its
/// inverse (branch picks the sign of z).
StereoState levi_civita(const LCState& lc);
LCState lc_inverse(const StereoState& st, Branch branch);

/// Sign resolving the orientation of the angular term carried through the
/// chain: the transported Hamiltonian is -1/(2|s|^2) + sigma*(r1 s2 - r2 s1).
/// Determined once from one exact sample and cached.
int resolved_sigma();

/// Full embedding chain: ligon_schaaf, stereographic chart, squaring-chart
/// inverse, followed (iff resolved_sigma() == -1) by the component swap
/// (z1,z2,w1,w2) -> (z2,z1,w2,w1) that flips the sign of the angular
/// invariant b. The image lies on the zero set of F(., rkp_hamiltonian(st)).
LCState compose_embedding(const PlanarState& st, Branch branch);

/// Value of the transported Hamiltonian in the (z,w) chart:
/// -1/(2 a^2) + 2 b with a = |w|^2 + |z|^2, b = w1 z2 - w2 z1.
double pullback_hamiltonian(const LCState& lc);

/// The two surface invariants (a, b) of a chart point.
struct SurfaceInvariants {
    double a;
    double b;
};
SurfaceInvariants surface_invariants(const LCState& lc);

enum class MapId { LigonSchaaf, LeviCivita, Composed, Identity };

/// Maximum mismatch of the canonical two-forms under the differential of
/// the chosen map, with the Jacobian built by central differences of step h.
/// The two-form on the (z,w) side is 4 * sum dw_i ^ dz_i: the squaring
/// chart rescales the standard form by the constant 4, and this is the
/// normalization that the chain preserves (checked in the test suite; the
/// weight is exposed as lc_symplectic_weight).
double symplecticity_defect(MapId map, const Vec4& point, double h);

inline constexpr double lc_symplectic_weight = 4.0;

/// Seeded sample of the negative-energy domain used by the property
/// suites: q uniform in the annulus 0.3 <= |q| <= 2, p uniform in the disc
/// |p| <= 2, rejected until kepler_energy <= kmax. The default bound keeps
/// samples away from the parabolic boundary, where derivative-based checks
/// lose accuracy.
PlanarState sample_negative_energy(Rng& rng, double kmax = -0.05);

}  // namespace rkconvex::kepler
