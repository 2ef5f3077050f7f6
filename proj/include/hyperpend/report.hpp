#pragma once

#include <json.hpp>

#include "hyperpend/analysis.hpp"
#include "hyperpend/dynamics.hpp"
#include "hyperpend/reduction.hpp"
#include "hyperpend/tolerances.hpp"
#include "hyperpend/verify.hpp"

namespace hyperpend {

// Stable keys: class, c, jsq, energy, case, components[], equilibria[].
// Extra keys (regime, summary, critical_w1, ...) are additive only.
nlohmann::ordered_json to_json(const ClassificationReport& report);

nlohmann::ordered_json to_json(const LevelComponent& component);
nlohmann::ordered_json to_json(const ReducedPoint& w);

struct SimulationSummary {
    double max_energy_drift = 0.0;
    double max_momentum_drift = 0.0;
    double max_casimir_residual = 0.0;
    std::size_t rows = 0;
    bool within_tolerance = false;
};

SimulationSummary summarize(const Trajectory& traj, const Tolerances& tol = {});
nlohmann::ordered_json to_json(const SimulationSummary& s, const Tolerances& tol = {});

nlohmann::ordered_json to_json(const VerifyReport& report);

}  // namespace hyperpend
