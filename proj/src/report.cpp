#include "hyperpend/report.hpp"

#include <cmath>

namespace hyperpend {

namespace {

// JSON has no infinities; unbounded extents are written as null.
nlohmann::ordered_json finite_or_null(double v)
{
    if (std::isfinite(v)) return v;
    return nullptr;
}

nlohmann::ordered_json optional_value(const std::optional<double>& v)
{
    if (v) return *v;
    return nullptr;
}

}  // namespace

nlohmann::ordered_json to_json(const ReducedPoint& w) { return nlohmann::ordered_json::array({w.w1, w.w2, w.w3, w.w4}); }

nlohmann::ordered_json to_json(const LevelComponent& comp)
{
    nlohmann::ordered_json j;
    j["shape"] = to_string(comp.shape);
    j["bounded"] = comp.bounded;
    j["contains_equilibrium"] = comp.contains_equilibrium;
    j["trajectories"] = comp.trajectories;
    j["w1_min"] = finite_or_null(comp.w1_min);
    j["w1_max"] = finite_or_null(comp.w1_max);
    j["w2_max"] = finite_or_null(comp.w2_max);
    j["w3_min"] = finite_or_null(comp.w3_min);
    j["w3_max"] = finite_or_null(comp.w3_max);
    j["stationary_w1"] = comp.stationary_w1;
    j["description"] = comp.description;
    return j;
}

nlohmann::ordered_json to_json(const ClassificationReport& r)
{
    nlohmann::ordered_json j;
    j["class"] = std::string(r.cls.name());
    j["c"] = r.c;
    j["jsq"] = r.level.jsq;
    j["energy"] = r.level.energy;
    j["case"] = r.case_label;
    j["components"] = nlohmann::ordered_json::array();
    for (const auto& comp : r.components) j["components"].push_back(to_json(comp));
    j["equilibria"] = nlohmann::ordered_json::array();
    for (const auto& e : r.equilibria) {
        nlohmann::ordered_json q;
        q["w"] = to_json(e.w);
        q["jsq"] = e.jsq;
        q["on_level"] = e.on_level;
        q["stability"] = to_string(e.stability.kind);
        q["restricted_k"] = e.stability.restricted_k;
        nlohmann::ordered_json eig = nlohmann::ordered_json::array();
        for (const auto& l : e.stability.eigenvalues) eig.push_back({l.real(), l.imag()});
        q["eigenvalues"] = eig;
        j["equilibria"].push_back(q);
    }
    j["regime"] = r.regime;
    j["summary"] = r.summary;
    j["empty"] = r.empty;
    j["critical_w1"] = r.critical_w1;
    j["c1_minus"] = optional_value(r.c1_minus);
    j["c1_plus"] = optional_value(r.c1_plus);
    j["degenerate_jsq"] = optional_value(r.degenerate_jsq);
    j["printed_degenerate_jsq"] = optional_value(r.printed_degenerate_jsq);
    j["jsq_max"] = optional_value(r.jsq_max);
    return j;
}

SimulationSummary summarize(const Trajectory& traj, const Tolerances& tol)
{
    SimulationSummary s;
    s.rows = traj.size();
    s.max_energy_drift = traj.max_energy_drift();
    s.max_momentum_drift = traj.max_momentum_drift();
    s.max_casimir_residual = traj.max_casimir_residual();
    s.within_tolerance = s.max_energy_drift <= tol.drift && s.max_momentum_drift <= tol.drift && s.max_casimir_residual <= tol.constraint;
    return s;
}

nlohmann::ordered_json to_json(const SimulationSummary& s, const Tolerances& tol)
{
    nlohmann::ordered_json j;
    j["rows"] = s.rows;
    j["maxHdrift"] = s.max_energy_drift;
    j["maxJdrift"] = s.max_momentum_drift;
    j["maxCasimirResidual"] = s.max_casimir_residual;
    j["tolerances"] = {{"drift", tol.drift}, {"constraint", tol.constraint}};
    j["within_tolerance"] = s.within_tolerance;
    return j;
}

nlohmann::ordered_json to_json(const VerifyReport& report)
{
    nlohmann::ordered_json j;
    j["seed"] = report.seed;
    j["all_passed"] = report.all_passed();
    j["warnings"] = report.warnings;
    j["suites"] = nlohmann::ordered_json::array();
    for (const auto& s : report.suites)
        j["suites"].push_back({{"name", s.name},
                               {"passed", s.passed},
                               {"samples", s.samples},
                               {"max_residual", finite_or_null(s.max_residual)},
                               {"tolerance", s.tolerance},
                               {"detail", s.detail}});
    return j;
}

}  // namespace hyperpend
