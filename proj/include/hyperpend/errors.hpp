#pragma once

#include <stdexcept>
#include <string>

namespace hyperpend {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The Dirac correction matrix is singular (<x,x>_L too close to zero).
struct DegeneratePointError : Error {
    using Error::Error;
};

// An integration step left the chart of the upper hyperboloid sheet.
struct StepFailure : Error {
    StepFailure(const std::string& what, long step_index) : Error(what), step(step_index) {}
    long step;
};

// A reduced point is not in the image of the Hilbert map.
struct MembershipError : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

// A rational potential was evaluated too close to a zero of its denominator.
struct PoleError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace hyperpend
