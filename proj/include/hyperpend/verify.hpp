#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperpend/kernels.hpp"
#include "hyperpend/sampling.hpp"
#include "hyperpend/tolerances.hpp"

namespace hyperpend {

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t count = 200;          // random points per pointwise suite
    std::size_t trajectories = 2;     // trajectories per class for the flow suites (0 when count == 0)
    double flow_time = 1.0;           // integration horizon of the flow suites
    double dt = 1e-3;
    bool corrupt_bracket = false;     // plant a sign error in one reduced table
    kernels::Backend backend = kernels::Backend::OpenMP;
    Tolerances tol;
};

struct SuiteResult {
    std::string name;
    std::size_t samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;
    std::vector<std::string> warnings;
    bool all_passed() const;
};

// Runs every certificate; deterministic for a fixed seed. Failures are
// reported in the result, never thrown.
VerifyReport run_verification(const VerifyOptions& opts = {});

// One line per suite: PASS|FAIL name samples=... max=... tol=... detail.
void print_verification(std::ostream& os, const VerifyReport& report);

}  // namespace hyperpend
