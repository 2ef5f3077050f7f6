#pragma once

#include <string>

namespace hyperpend {

struct Tolerances {
    double constraint = 1e-10;  // Casimir residuals on V
    double identity = 1e-9;     // polynomial identities evaluated numerically
    double degenerate = 1e-8;   // singular Dirac correction / rational poles
    double drift = 1e-7;        // first-integral drift along a trajectory
    double rank = 1e-8;         // smallest singular value for rank deficiency
    double case_boundary = 1e-9;  // coincidence with a degenerate case boundary
};

// Applies a JSON fragment such as {"identity": 1e-8} on top of `base`.
// Unknown keys are rejected.
Tolerances apply_tolerance_override(Tolerances base, const std::string& json_fragment);

// Defaults, overridden by the HYPERPEND_TOL_OVERRIDE environment variable
// when it is set.
Tolerances tolerances_from_environment();

}  // namespace hyperpend
