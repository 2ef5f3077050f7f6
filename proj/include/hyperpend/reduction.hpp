#pragma once

#include <array>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "hyperpend/brackets.hpp"
#include "hyperpend/certificates.hpp"
#include "hyperpend/minkowski.hpp"
#include "hyperpend/potential.hpp"
#include "hyperpend/symmetry.hpp"
#include "hyperpend/tolerances.hpp"

namespace hyperpend {

// A point of R^4 in Hilbert-map coordinates. On the reduced variety Y
// it satisfies w4^2 = q(w1) w3 - w2^2. Routines that work with the 3-D
// projection ignore w4.
struct ReducedPoint {
    double w1 = 0.0;
    double w2 = 0.0;
    double w3 = 0.0;
    double w4 = 0.0;

    std::array<double, 4> coords() const { return {w1, w2, w3, w4}; }
    static ReducedPoint from_coords(std::span<const double> w) { return {w[0], w[1], w[2], w.size() > 3 ? w[3] : 0.0}; }
    friend bool operator==(const ReducedPoint&, const ReducedPoint&) = default;
};

// First integrals of the reduced system.
double reduced_jsq(RotationClass cls, const ReducedPoint& w);  // q(w1) w3 - w2^2
double reduced_energy(const Potential& u, const ReducedPoint& w);  // w3/2 + U(w1)
double variety_residual(RotationClass cls, const ReducedPoint& w);  // w4^2 - jsq

// Hilbert map components:
//   elliptic   (x3, y3, <y,y>_L, x1 y2 - x2 y1)
//   hyperbolic (x1, y1, <y,y>_L, x3 y2 - x2 y3)
//   parabolic  (x2 - x3, y2 - y3, <y,y>_L, x1 (y2 - y3) + y1 (x3 - x2))
ReducedPoint hilbert_map(RotationClass cls, const PhasePoint& z);
std::vector<Polynomial> hilbert_polynomials(RotationClass cls);

// The Hilbert map as a GeneratorSet: four generators, the variety relation
// of Y, and the image predicate of T H^2.
GeneratorSet hilbert_generators(RotationClass cls, const Tolerances& tol = {});

// All six invariant generators of the ambient action with their relation
// and the two extra relations that hold on V (in that order). For the
// parabolic class the eliminated relation on V is appended as a fourth.
GeneratorSet invariant_generators(RotationClass cls);

// Induced bracket on Y: {w1,w2}' = q(w1), {w2,w3}' = 2 w1 w3,
// {w3,w1}' = -2 w2, {wi,w4}' = 0.
BracketTable reduced_table(RotationClass cls);

// h(w) = w3/2 + U(w1) in four variables (polynomial potentials only).
Polynomial reduced_hamiltonian(const Potential& u);

// ---- image of T H^2 ---------------------------------------------------

enum class ImageStratum {
    Interior,   // generic image points
    ApexRay,    // elliptic (1, 0, w3, 0), w3 >= 0
    AxisRay,    // elliptic (w1, 0, 0, 0), w1 >= 1
    NotMember,
};

struct MembershipVerdict {
    bool member = false;
    ImageStratum stratum = ImageStratum::NotMember;
    std::string reason;

    explicit operator bool() const { return member; }
};

// Full 4-D image, including the variety relation.
MembershipVerdict image_membership(RotationClass cls, const ReducedPoint& w, const Tolerances& tol = {});
// Image of the 3-D projection (w4 ignored).
MembershipVerdict image_membership_3d(RotationClass cls, const ReducedPoint& w, const Tolerances& tol = {});

// Canonical preimage in T H^2 with hilbert_map(cls, lift(cls, w)) = w.
// Throws MembershipError when w is not in the image.
PhasePoint lift(RotationClass cls, const ReducedPoint& w, const Tolerances& tol = {});
// Preimage of (w1, w2, w3, -w4): the second orbit over the same 3-D point.
PhasePoint lift_other(RotationClass cls, const ReducedPoint& w, const Tolerances& tol = {});
// Preimage of a 3-D point, taking w4 = +sqrt(jsq).
PhasePoint lift_3d(RotationClass cls, const ReducedPoint& w, const Tolerances& tol = {});

enum class FiberKind { TwoOrbits, OneOrbit, Point };
enum class OrbitGeometry { Ellipse, HyperbolaBranch, Parabola, Point };

struct FiberDescription {
    FiberKind kind = FiberKind::OneOrbit;
    OrbitGeometry geometry = OrbitGeometry::Ellipse;
    int orbit_count = 1;
    std::string label;
};

// Inverse image of a 3-D image point under the projected Hilbert map.
FiberDescription fiber_description(RotationClass cls, const ReducedPoint& w, const Tolerances& tol = {});

std::string to_string(ImageStratum s);
std::string to_string(FiberKind k);
std::string to_string(OrbitGeometry g);

// ---- reduced dynamics -------------------------------------------------

// w1' = w2, w2' = w1 w3 - q(w1) U'(w1), w3' = -2 w2 U'(w1), w4' = 0.
std::array<double, 4> reduced_field(RotationClass cls, const Potential& u, const ReducedPoint& w);

struct ReducedTrajectory {
    std::vector<double> t;
    std::vector<ReducedPoint> w;
    std::vector<double> jsq;
    std::vector<double> energy;
    bool escaped = false;  // stopped because |w1| exceeded the escape radius

    double max_jsq_drift() const;
    double max_energy_drift() const;
};

struct ReducedIntegrationOptions {
    double escape_radius = std::numeric_limits<double>::infinity();
    bool require_membership = true;
};

// Classical fourth-order one-step integration of reduced_field. Throws
// MembershipError when the projection of w0 is not in the image (unless
// disabled in the options).
ReducedTrajectory integrate_reduced(RotationClass cls, const Potential& u, const ReducedPoint& w0, double dt, long steps,
                                    const ReducedIntegrationOptions& opts = {}, const Tolerances& tol = {});

// CSV with header t,w1,w2,w3,w4,jsq,h.
void write_reduced_csv(std::ostream& os, const ReducedTrajectory& traj);

}  // namespace hyperpend
