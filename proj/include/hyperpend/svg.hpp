#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperpend/analysis.hpp"
#include "hyperpend/potential.hpp"
#include "hyperpend/symmetry.hpp"

namespace hyperpend {

struct PlotWindow {
    double w1_min = 0.0;
    double w1_max = 0.0;
    double w2_half = 0.0;  // 0: fit to the drawn curves
};

// Default (w1) windows: elliptic [1, 5], hyperbolic [-3, 3], parabolic [-4, 0].
PlotWindow default_window(RotationClass cls);

using Polyline = std::vector<std::pair<double, double>>;  // (w1, w2)

struct PlotSpec {
    RotationClass cls = RotationKind::Elliptic;
    Potential potential = Potential::linear(1.0);
    std::vector<LevelSpec> levels;          // drawn as level curves, one colour each
    std::vector<Polyline> trajectories;     // optional reduced trajectories in the (w1, w2) plane
    PlotWindow window = default_window(RotationKind::Elliptic);
    int samples = 801;                      // w1 grid per level
    std::string title;
};

// Red points: relative equilibria whose jsq equals one of the plotted levels.
std::vector<std::pair<double, double>> plotted_equilibria(const PlotSpec& spec, const Tolerances& tol = {});

// Polylines of one level in the (w1, w2) plane, split where the radicand is negative.
std::vector<Polyline> level_polylines(RotationClass cls, const Potential& u, const LevelSpec& level, const PlotWindow& window,
                                      int samples, const Tolerances& tol = {});

// Deterministic SVG document, fixed 800x600 viewBox. An empty spec yields
// axes only.
std::string render_svg(const PlotSpec& spec, const Tolerances& tol = {});

// Energies bracketing the relative equilibria at the given jsq, used when a
// plot names levels by jsq alone.
std::vector<double> default_energies(RotationClass cls, const Potential& u, double jsq, const Tolerances& tol = {});

}  // namespace hyperpend
