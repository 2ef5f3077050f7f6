#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "hyperpend/potential.hpp"
#include "hyperpend/reduction.hpp"
#include "hyperpend/symmetry.hpp"
#include "hyperpend/tolerances.hpp"

namespace hyperpend {

// Level of the reduced first integrals: jsq = q(w1) w3 - w2^2, energy = h.
struct LevelSpec {
    double jsq = 0.0;
    double energy = 0.0;
};

// ---- relative equilibria ----------------------------------------------

struct ReducedEquilibrium {
    ReducedPoint w;      // (rho, 0, q(rho) U'(rho) / rho, sqrt(jsq))
    double rho = 0.0;
    std::string kind;    // "z1", "z_rho" or "z_sigma"
    std::string fiber;   // what the equilibrium lifts to
};

// A closed or half-open interval of rho values, all of which are equilibria.
struct EquilibriumFamily {
    double rho_min = 0.0;
    double rho_max = 0.0;
    bool min_open = false;
    bool max_open = false;
    bool isolated() const { return rho_min == rho_max; }
};

struct RelativeEquilibria {
    std::vector<EquilibriumFamily> families;
    std::vector<ReducedEquilibrium> points;  // z1, the z*_sigma ray samples and samples of every family
    bool sigma_ray = false;                  // hyperbolic, U'(0) = 0: all (0, 0, sigma), sigma >= 0
};

struct EquilibriumScan {
    double radius = 1e3;        // roots of U' are searched on [-radius, radius]
    int cells = 20000;
    double sample_radius = 10;  // family samples are taken inside [-sample_radius, sample_radius]
    int samples_per_family = 16;
};

// Stationary points of the reduced system in the image:
//   elliptic   z1 = (1, 0, 0) and z_rho with rho > 1, U'(rho) >= 0
//   hyperbolic z_rho with rho != 0, rho U'(rho) >= 0, and (0, 0, sigma) when U'(0) = 0
//   parabolic  z_rho with rho < 0, rho U'(rho) >= 0
RelativeEquilibria relative_equilibria(RotationClass cls, const Potential& u, const EquilibriumScan& scan = {},
                                       const Tolerances& tol = {});

// ---- linearization ------------------------------------------------------

using Matrix3 = std::array<std::array<double, 3>, 3>;

// Jacobian of reduced_field in (w1, w2, w3).
Matrix3 reduced_jacobian(RotationClass cls, const Potential& u, const ReducedPoint& w);

enum class StabilityKind { Center, Saddle, Degenerate };

struct Stability {
    StabilityKind kind = StabilityKind::Degenerate;
    // Linearization restricted to the level surface through w: w1'' = k (w1 - w1*).
    double restricted_k = 0.0;
    // Eigenvalues of reduced_jacobian; on a stationary point these are
    // {0, +-sqrt(k)}. Sorted by imaginary part, then real part.
    std::array<std::complex<double>, 3> eigenvalues{};
};

// Center / saddle classification of a stationary point w (w2 = 0) of the
// reduced system, from G(w1) = 2 (h(w) - U(w1)) q(w1) and k = G''(w1) / 2.
Stability stability(RotationClass cls, const Potential& u, const ReducedPoint& w, const Tolerances& tol = {});

std::string to_string(StabilityKind k);

// ---- level sets -----------------------------------------------------------

struct LevelSample {
    ReducedPoint w;        // (w1, w2, w3) with w4 = sqrt(jsq)
    bool endpoint = false; // radicand vanishes (turning point, crossing or isolated point)
};

struct LevelCurve {
    std::vector<LevelSample> samples;
    bool empty() const { return samples.empty(); }
};

// The radicand F(w1) = 2 (energy - U(w1)) q(w1) - jsq; on the level set
// w2^2 = F(w1) and w3 = 2 (energy - U(w1)).
double level_radicand(RotationClass cls, const Potential& u, const LevelSpec& level, double w1);

// Samples of the level set over n uniform w1 values in [w1_min, w1_max],
// both branches w2 = +-sqrt(F), restricted to the image of T H^2. Roots of
// F inside the range are added as endpoint samples. Throws InvalidParameter
// for n < 2 or jsq < 0.
LevelCurve level_curve(RotationClass cls, const Potential& u, const LevelSpec& level, double w1_min, double w1_max, int n,
                       const Tolerances& tol = {});

enum class ComponentShape {
    Point,           // an isolated stationary point
    ClosedLoop,      // a periodic trajectory
    UnboundedCurve,  // one unbounded trajectory through a turning point
    UnboundedBranch, // one of two disjoint unbounded branches (w2 > 0 or w2 < 0)
    LoopToOrigin,    // parabolic: a bounded loop whose closure contains w1 = 0
    Singular,        // contains stationary points joined by homoclinic arcs or branches
};

struct LevelComponent {
    ComponentShape shape = ComponentShape::ClosedLoop;
    bool bounded = false;
    bool contains_equilibrium = false;
    int trajectories = 1;          // number of reduced trajectories making up the component
    double w1_min = 0.0;           // -inf / +inf for unbounded ends
    double w1_max = 0.0;
    double w2_max = 0.0;           // max |w2| over the finite part of the range
    double w3_min = 0.0;
    double w3_max = 0.0;
    std::vector<double> stationary_w1;  // stationary points on the component
    std::string description;
};

struct LevelAnalysisOptions {
    double radius = 1e3;  // w1 window for hyperbolic and parabolic searches
    int cells = 4000;
};

// Connected components of the level set in the image, from the sign
// pattern of F between its roots and critical points.
std::vector<LevelComponent> level_components(RotationClass cls, const Potential& u, const LevelSpec& level,
                                             const LevelAnalysisOptions& opts = {}, const Tolerances& tol = {});

std::string to_string(ComponentShape s);

// ---- smoothness -----------------------------------------------------------

struct SmoothnessVerdict {
    bool critical = false;
    double sigma_min = 0.0;
};

// Rank test of the 2x3 Jacobian of (jsq, h) at w.
SmoothnessVerdict level_set_smoothness(RotationClass cls, const Potential& u, const ReducedPoint& w, const Tolerances& tol = {});

// ---- linear potentials ------------------------------------------------------

struct ClassifiedEquilibrium {
    ReducedPoint w;
    double jsq = 0.0;          // level on which the equilibrium lies
    bool on_level = false;     // jsq equals the queried level
    Stability stability;
};

struct ClassificationReport {
    RotationClass cls = RotationKind::Elliptic;
    double c = 0.0;
    LevelSpec level;
    std::string case_label;    // "1", "2", "3"
    std::string regime;        // bullet within the case
    std::string summary;       // the bullet's statement
    bool empty = false;
    std::vector<LevelComponent> components;
    std::vector<ClassifiedEquilibrium> equilibria;
    std::vector<double> critical_w1;       // stationary w1 on the energy surface, sorted
    std::optional<double> c1_minus;        // hyperbolic case 3: jsq at the saddle
    std::optional<double> c1_plus;         // hyperbolic case 3: jsq at the center
    std::optional<double> degenerate_jsq;  // hyperbolic case 2: jsq at the cusp
    std::optional<double> printed_degenerate_jsq;  // closed form 16 sqrt(3) c / 9 (sign as printed)
    std::optional<double> jsq_max;         // parabolic case 2: largest jsq with a nonempty level
};

// Case table for U = c w1. Throws InvalidParameter for c == 0 or jsq < 0.
ClassificationReport classify_linear(RotationClass cls, double c, const LevelSpec& level, const Tolerances& tol = {});

// Closed-form stationary w1 on the energy surface of U = c w1.
std::vector<double> linear_critical_points(RotationClass cls, double c, double energy);

// ---- reconstruction -------------------------------------------------------

struct TrajectorySummary {
    bool bounded = true;
    bool stationary = false;
};

std::string reconstruction_topology(RotationClass cls, const LevelSpec& level, const TrajectorySummary& summary,
                                    const Tolerances& tol = {});

}  // namespace hyperpend
