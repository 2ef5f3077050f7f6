#include <algorithm>
#include <cmath>
#include <exception>

#include "hyperpend/dynamics.hpp"
#include "hyperpend/kernels.hpp"
#include "hyperpend/reduction.hpp"

namespace hyperpend::kernels {

namespace detail {

EnsembleStats run_one(RotationClass cls, const Potential& u, const PhasePoint& z0, double dt, long steps)
{
    EnsembleStats s;
    try {
        const Trajectory tr = integrate(cls, u, z0, dt, steps);
        s.max_energy_drift = tr.max_energy_drift();
        s.max_momentum_drift = tr.max_momentum_drift();
        s.max_casimir_residual = tr.max_casimir_residual();
    } catch (const std::exception& e) {
        s.failed = true;
        s.error = e.what();
    }
    return s;
}

}  // namespace detail

namespace serial {

double max_over(std::size_t n, const std::function<double(std::size_t)>& f)
{
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = f(i);
        if (std::isnan(v)) return v;
        m = std::max(m, v);
    }
    return m;
}

std::vector<ReducedPoint> hilbert_batch(RotationClass cls, std::span<const PhasePoint> points)
{
    std::vector<ReducedPoint> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = hilbert_map(cls, points[i]);
    return out;
}

std::vector<EnsembleStats> integrate_ensemble(RotationClass cls, const Potential& u, std::span<const PhasePoint> initial,
                                              double dt, long steps)
{
    std::vector<EnsembleStats> out(initial.size());
    for (std::size_t i = 0; i < initial.size(); ++i) out[i] = detail::run_one(cls, u, initial[i], dt, steps);
    return out;
}

}  // namespace serial

double max_over(std::size_t n, const std::function<double(std::size_t)>& f, Backend backend)
{
    return backend == Backend::Serial ? serial::max_over(n, f) : omp::max_over(n, f);
}

std::vector<ReducedPoint> hilbert_batch(RotationClass cls, std::span<const PhasePoint> points, Backend backend)
{
    return backend == Backend::Serial ? serial::hilbert_batch(cls, points) : omp::hilbert_batch(cls, points);
}

std::vector<EnsembleStats> integrate_ensemble(RotationClass cls, const Potential& u, std::span<const PhasePoint> initial,
                                              double dt, long steps, Backend backend)
{
    return backend == Backend::Serial ? serial::integrate_ensemble(cls, u, initial, dt, steps)
                                      : omp::integrate_ensemble(cls, u, initial, dt, steps);
}

}  // namespace hyperpend::kernels
