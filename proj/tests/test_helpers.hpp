#pragma once

#include <cmath>
#include <vector>

#include "hyperpend/minkowski.hpp"
#include "hyperpend/reduction.hpp"

namespace testing {

inline double max_abs_diff(const hyperpend::Vec6& a, const hyperpend::Vec6& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < 6; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double max_abs_diff(const hyperpend::ReducedPoint& a, const hyperpend::ReducedPoint& b)
{
    return std::max({std::abs(a.w1 - b.w1), std::abs(a.w2 - b.w2), std::abs(a.w3 - b.w3), std::abs(a.w4 - b.w4)});
}

inline double max_abs_diff(const hyperpend::MinkVec& a, const hyperpend::MinkVec& b)
{
    return std::max({std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2), std::abs(a.x3 - b.x3)});
}

}  // namespace testing
