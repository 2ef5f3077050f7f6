#pragma once

#include <functional>
#include <vector>

namespace hyperpend {

// Sign-change scan of f on [lo, hi] with n uniform cells, each bracket
// refined by bisection to width `xtol`. Exact zeros at grid nodes are kept.
std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi, int n, double xtol = 1e-12);

// Zeros of f where f does not change sign: zeros of fprime at which
// |f| <= ftol.
std::vector<double> scan_touching_roots(const std::function<double(double)>& f, const std::function<double(double)>& fprime,
                                        double lo, double hi, int n, double ftol, double xtol = 1e-12);

// Sorted union of two root lists, merging entries closer than `merge`.
std::vector<double> merge_roots(std::vector<double> a, const std::vector<double>& b, double merge);

}  // namespace hyperpend
