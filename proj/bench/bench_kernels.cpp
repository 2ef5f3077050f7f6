// Times the serial reference kernels against the OpenMP kernels on the same
// inputs and checks that both produce identical results.
//
//   bench_kernels [points] [trajectories] [steps]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "hyperpend/brackets.hpp"
#include "hyperpend/kernels.hpp"
#include "hyperpend/reduction.hpp"
#include "hyperpend/sampling.hpp"

using namespace hyperpend;

namespace {

template <class F>
double seconds(F&& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv)
{
    const std::size_t points = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 20000;
    const std::size_t trajectories = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 16;
    const long steps = argc > 3 ? std::strtol(argv[3], nullptr, 10) : 2000;

    Sampler sampler;
    std::vector<PhasePoint> pts(points);
    for (auto& z : pts) z = sampler.point_on_TH2();
    const BracketTable table = dirac_table();

    std::printf("threads: %d\n", kernels::omp::max_threads());
    std::printf("%-22s %12s %12s %8s %s\n", "kernel", "serial [s]", "openmp [s]", "speedup", "identical");
    bool all_same = true;
    auto row = [&](const char* name, double ts, double tp, bool same) {
        all_same = all_same && same;
        std::printf("%-22s %12.4f %12.4f %8.2f %s\n", name, ts, tp, tp > 0 ? ts / tp : 0.0, same ? "yes" : "NO");
    };

    {
        const auto f = [&](std::size_t i) { return table.max_jacobi(pts[i].coords()); };
        double rs = 0, rp = 0;
        const double ts = seconds([&] { rs = kernels::serial::max_over(points, f); });
        const double tp = seconds([&] { rp = kernels::omp::max_over(points, f); });
        row("jacobi max_over", ts, tp, rs == rp);
    }
    for (RotationClass cls : RotationClass::all()) {
        std::vector<ReducedPoint> ws, wp;
        const double ts = seconds([&] { ws = kernels::serial::hilbert_batch(cls, pts); });
        const double tp = seconds([&] { wp = kernels::omp::hilbert_batch(cls, pts); });
        row(cls.kind() == RotationKind::Elliptic ? "hilbert_batch/ell" : cls.kind() == RotationKind::Hyperbolic ? "hilbert_batch/hyp"
                                                                                                               : "hilbert_batch/par",
            ts, tp, ws == wp);
    }
    for (RotationClass cls : RotationClass::all()) {
        std::vector<PhasePoint> init(trajectories);
        for (auto& z : init) z = sampler.generic_initial_condition(cls);
        const Potential u = quadratic_test_potential(cls);
        std::vector<kernels::EnsembleStats> ss, sp;
        const double ts = seconds([&] { ss = kernels::serial::integrate_ensemble(cls, u, init, 1e-3, steps); });
        const double tp = seconds([&] { sp = kernels::omp::integrate_ensemble(cls, u, init, 1e-3, steps); });
        bool same = ss.size() == sp.size();
        for (std::size_t i = 0; same && i < ss.size(); ++i)
            same = ss[i].max_energy_drift == sp[i].max_energy_drift && ss[i].max_momentum_drift == sp[i].max_momentum_drift &&
                   ss[i].failed == sp[i].failed;
        for (const auto& st : ss)
            if (st.failed) std::printf("  trajectory failed: %s\n", st.error.c_str());
        row(cls.kind() == RotationKind::Elliptic ? "ensemble/ell" : cls.kind() == RotationKind::Hyperbolic ? "ensemble/hyp" : "ensemble/par",
            ts, tp, same);
    }
    return all_same ? 0 : 1;
}
