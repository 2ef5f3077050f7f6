#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#include <omp.h>

#include "hyperpend/dynamics.hpp"
#include "hyperpend/kernels.hpp"
#include "hyperpend/reduction.hpp"

namespace hyperpend::kernels {

namespace detail {
EnsembleStats run_one(RotationClass cls, const Potential& u, const PhasePoint& z0, double dt, long steps);
}

namespace omp {

namespace {

// Exceptions must not escape a parallel region; keep the first one and
// rethrow it on the calling thread.
class ExceptionSlot {
public:
    void capture()
    {
#pragma omp critical(hyperpend_exception_slot)
        if (!ptr_) ptr_ = std::current_exception();
    }
    void rethrow() const
    {
        if (ptr_) std::rethrow_exception(ptr_);
    }

private:
    std::exception_ptr ptr_;
};

}  // namespace

int max_threads() { return omp_get_max_threads(); }

double max_over(std::size_t n, const std::function<double(std::size_t)>& f)
{
    // Each index writes its own slot; the reduction below runs in index
    // order, so the result matches the serial kernel bit for bit.
    std::vector<double> vals(n);
    ExceptionSlot err;
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) {
        try {
            vals[std::size_t(i)] = f(std::size_t(i));
        } catch (...) {
            err.capture();
        }
    }
    err.rethrow();
    double m = 0.0;
    for (double v : vals) {
        if (std::isnan(v)) return v;
        m = std::max(m, v);
    }
    return m;
}

std::vector<ReducedPoint> hilbert_batch(RotationClass cls, std::span<const PhasePoint> points)
{
    std::vector<ReducedPoint> out(points.size());
    const long long count = static_cast<long long>(points.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) out[std::size_t(i)] = hilbert_map(cls, points[std::size_t(i)]);
    return out;
}

std::vector<EnsembleStats> integrate_ensemble(RotationClass cls, const Potential& u, std::span<const PhasePoint> initial,
                                              double dt, long steps)
{
    std::vector<EnsembleStats> out(initial.size());
    const long long count = static_cast<long long>(initial.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) out[std::size_t(i)] = detail::run_one(cls, u, initial[std::size_t(i)], dt, steps);
    return out;
}

}  // namespace omp
}  // namespace hyperpend::kernels
