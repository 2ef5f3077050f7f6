#pragma once

// Data-parallel loops used by the certificates, the verification suites and
// ensemble integrations. Every kernel has a serial reference implementation
// and an OpenMP implementation with the same signature; results are merged
// by index so both backends return identical values.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hyperpend/minkowski.hpp"

namespace hyperpend {

class RotationClass;
class Potential;
struct ReducedPoint;
struct Trajectory;

namespace kernels {

enum class Backend { Serial, OpenMP };

// Per-trajectory conservation summary.
struct EnsembleStats {
    double max_energy_drift = 0.0;
    double max_momentum_drift = 0.0;
    double max_casimir_residual = 0.0;
    bool failed = false;
    std::string error;
};

namespace serial {
// max_i f(i) over [0, n); NaN if any f(i) is NaN, 0 when n == 0.
double max_over(std::size_t n, const std::function<double(std::size_t)>& f);
std::vector<ReducedPoint> hilbert_batch(RotationClass cls, std::span<const PhasePoint> points);
std::vector<EnsembleStats> integrate_ensemble(RotationClass cls, const Potential& u, std::span<const PhasePoint> initial,
                                              double dt, long steps);
}  // namespace serial

namespace omp {
double max_over(std::size_t n, const std::function<double(std::size_t)>& f);
std::vector<ReducedPoint> hilbert_batch(RotationClass cls, std::span<const PhasePoint> points);
std::vector<EnsembleStats> integrate_ensemble(RotationClass cls, const Potential& u, std::span<const PhasePoint> initial,
                                              double dt, long steps);
int max_threads();
}  // namespace omp

double max_over(std::size_t n, const std::function<double(std::size_t)>& f, Backend backend = Backend::OpenMP);
std::vector<ReducedPoint> hilbert_batch(RotationClass cls, std::span<const PhasePoint> points, Backend backend = Backend::OpenMP);
std::vector<EnsembleStats> integrate_ensemble(RotationClass cls, const Potential& u, std::span<const PhasePoint> initial,
                                              double dt, long steps, Backend backend = Backend::OpenMP);

}  // namespace kernels
}  // namespace hyperpend
