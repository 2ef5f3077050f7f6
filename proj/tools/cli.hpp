#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hyperpend/potential.hpp"
#include "hyperpend/symmetry.hpp"
#include "hyperpend/tolerances.hpp"

namespace hyperpend::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;      // a check ran and failed (drift, verification)
inline constexpr int kExitConfig = 2;       // bad configuration or parameters
inline constexpr int kExitIntegration = 3;  // integration aborted
inline constexpr int kExitMembership = 4;   // reduced state outside the image
inline constexpr int kExitIo = 5;           // file could not be read or written

inline constexpr const char* kSchema = "hyperpend-scenario/1";

struct ScenarioConfig {
    RotationClass cls = RotationKind::Elliptic;
    Potential potential = Potential::zero();
    std::optional<std::vector<double>> z0;  // full-space initial condition (6 numbers)
    std::optional<std::vector<double>> w0;  // reduced initial condition (4 numbers, or 3 with w4 = sqrt(jsq))
    double dt = 1e-3;
    long steps = 1000;
    std::uint64_t seed = 20240611;  // same as the library default sampler seed
    Tolerances tol;
    std::string out;        // empty: stdout
    std::string summary;    // optional path for the JSON summary
    std::optional<double> c;
    std::vector<double> jsq;
    std::vector<double> energy;
    std::vector<double> window;            // [w1_min, w1_max] (optional third entry: w2 half-height)
    std::vector<std::string> trajectories;  // reduced CSV files to overlay in plots
    std::string title;
};

// Reads a scenario file. Requires the schema field; rejects unknown keys.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig config_from_json(const std::string& text);

// Entry point shared by the executable and the tests.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperpend::cli
