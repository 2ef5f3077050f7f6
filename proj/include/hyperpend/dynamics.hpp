#pragma once

#include <iosfwd>
#include <vector>

#include "hyperpend/minkowski.hpp"
#include "hyperpend/potential.hpp"
#include "hyperpend/symmetry.hpp"
#include "hyperpend/tolerances.hpp"

namespace hyperpend {

// Right-hand side of the constrained equations on T H^2:
//   x' = y,  y' = -g + x (<y,y>_L - <x,g>_L),  g = U'(s(x)) grad_L s.
Vec6 vector_field(RotationClass cls, const Potential& u, const PhasePoint& z);

// H = 1/2 <y,y>_L + U(s(x)).
double energy(RotationClass cls, const Potential& u, const PhasePoint& z);

struct Trajectory {
    std::vector<double> t;
    std::vector<PhasePoint> z;
    std::vector<double> energy;
    std::vector<double> momentum;
    std::vector<double> c1_residual;
    std::vector<double> c2_residual;

    std::size_t size() const { return t.size(); }
    double max_energy_drift() const;
    double max_momentum_drift() const;
    double max_casimir_residual() const;
};

// Classical fourth-order one-step integration of vector_field, each step
// followed by the projection x <- x / sqrt(-<x,x>_L), y <- y + <x,y>_L x.
// Throws InvalidParameter for dt <= 0 or z0 off T H^2, and StepFailure when
// a step leaves the upper sheet (<x,x>_L >= 0 or x3 <= 0) or the state
// becomes non-finite.
Trajectory integrate(RotationClass cls, const Potential& u, const PhasePoint& z0, double dt, long steps, const Tolerances& tol = {});

// Final state only; same checks as integrate, without recording history.
PhasePoint flow(RotationClass cls, const Potential& u, const PhasePoint& z0, double dt, long steps);

// The projection applied after every step.
PhasePoint project_to_TH2(const PhasePoint& z);

// CSV with header t,x1,x2,x3,y1,y2,y3,H,J,c1res,c2res.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

// Stationary points of the full system: y = 0 and the component of
// U'(s) grad_L s tangent to H^2 vanishes.
struct EquilibriumSearch {
    double radius = 1e3;         // scan U' on [-radius, radius] in the invariant coordinate
    int cells = 20000;
    int orbit_samples = 16;      // points returned per stationary orbit
    double orbit_extent = 2.0;   // parameter range for noncompact orbits: [-extent, extent]
};

struct FullEquilibria {
    bool everywhere = false;               // U' vanishes identically: every (x, 0) is stationary
    std::vector<double> invariant_values;  // s-values of the stationary orbits
    std::vector<PhasePoint> points;
};

FullEquilibria find_full_equilibria(RotationClass cls, const Potential& u, const EquilibriumSearch& search = {},
                                    const Tolerances& tol = {});

}  // namespace hyperpend
