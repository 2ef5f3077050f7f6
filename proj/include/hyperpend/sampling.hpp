#pragma once

#include <cstdint>
#include <random>

#include "hyperpend/minkowski.hpp"
#include "hyperpend/reduction.hpp"
#include "hyperpend/symmetry.hpp"

namespace hyperpend {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Seeded generators for phase-space and reduced test points. Every point is
// constructed to satisfy its constraints exactly up to rounding.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

    std::mt19937_64& engine() { return rng_; }
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    double sign() { return uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0; }

    // (x1, x2) uniform in [-position_radius, position_radius]^2 with
    // x3 = sqrt(1 + x1^2 + x2^2); (y1, y2) uniform in
    // [-velocity_radius, velocity_radius]^2 with y3 from <x,y>_L = 0.
    PhasePoint point_on_TH2(double position_radius = 2.0, double velocity_radius = 1.0);
    // As above, mirrored onto the lower sheet when requested.
    PhasePoint point_on_V(bool lower_sheet = false, double position_radius = 2.0, double velocity_radius = 1.0);

    // Elliptic parameters in [0, 2 pi), others in [-extent, extent].
    double group_parameter(RotationClass cls, double extent = 1.0);

    // A point of the image of T H^2 off the elliptic boundary rays: w1 and
    // w2 uniform, jsq uniform in [0, 4], w3 solved from the variety relation,
    // w4 = +-sqrt(jsq).
    ReducedPoint image_point(RotationClass cls);
    // Elliptic boundary strata: apex ray (1, 0, w3, 0), axis ray (w1, 0, 0, 0), apex.
    ReducedPoint elliptic_boundary_point();
    // 3-D image point (w4 = 0) with jsq drawn from [0, 4], including jsq = 0
    // with probability 1/4.
    ReducedPoint image_point_3d(RotationClass cls);

    // Initial condition on T H^2 for U = c s whose solution exists and stays
    // moderate on [0, 10]; finite-time blow-up rules out generic points for
    // most (class, sign of c) pairs:
    //   elliptic   c > 0 : generic point (all reduced motions are bounded)
    //   elliptic   c < 0 : small perturbation of the apex
    //   hyperbolic       : point on the bounded loop around the center, energy in [12, 15]
    //   parabolic  c < 0 : point on the bounded loop around the center
    //   parabolic  c > 0 : jsq ~ 1e-9 branch moving towards w1 = 0
    // followed by a random group action.
    PhasePoint bounded_initial_condition(RotationClass cls, double c);

    // Generic moderate initial condition; for the parabolic class the level
    // jsq is kept >= 0.05 so w1 stays away from 0.
    PhasePoint generic_initial_condition(RotationClass cls);

private:
    std::mt19937_64 rng_;
};

// Potentials used for commutation tests beyond the linear case:
// elliptic (s - 2)^2 / 2, hyperbolic s^2 / 2, parabolic s^2 / 2.
Potential quadratic_test_potential(RotationClass cls);

}  // namespace hyperpend
