#include "hyperpend/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <ostream>
#include <sstream>

#include "hyperpend/brackets.hpp"
#include "hyperpend/certificates.hpp"
#include "hyperpend/dynamics.hpp"
#include "hyperpend/reduction.hpp"

namespace hyperpend {

namespace {

SuiteResult from_certificate(std::string name, const CertificateReport& c)
{
    return {std::move(name), c.samples, c.max_residual, c.tolerance, c.passed, c.detail};
}

SuiteResult pointwise(std::string name, std::size_t n, double tolerance, kernels::Backend backend,
                      const std::function<double(std::size_t)>& residual)
{
    SuiteResult r;
    r.name = std::move(name);
    r.samples = n;
    r.tolerance = tolerance;
    r.max_residual = kernels::max_over(n, residual, backend);
    r.passed = r.max_residual <= tolerance;
    return r;
}

double max_abs_diff(const Vec6& a, const Vec6& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < 6; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double max_abs_diff(const ReducedPoint& a, const ReducedPoint& b)
{
    return std::max({std::abs(a.w1 - b.w1), std::abs(a.w2 - b.w2), std::abs(a.w3 - b.w3), std::abs(a.w4 - b.w4)});
}

BracketTable corrupted(const BracketTable& t)
{
    std::vector<Polynomial> entries;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) entries.push_back(t.at(i, j));
    // Flip {w1, w2}' only.
    entries[1] = -entries[1];
    entries[t.size()] = -entries[t.size()];
    return BracketTable::from_entries(t.size(), std::move(entries));
}

}  // namespace

bool VerifyReport::all_passed() const
{
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

VerifyReport run_verification(const VerifyOptions& opts)
{
    VerifyReport rep;
    rep.seed = opts.seed;
    const Tolerances& tol = opts.tol;
    const auto backend = opts.backend;
    Sampler sampler(opts.seed);

    const std::size_t n = opts.count;
    const std::size_t ntraj = n == 0 ? 0 : opts.trajectories;
    if (n == 0) rep.warnings.push_back("count = 0: every suite passes vacuously");

    std::vector<PhasePoint> pts(n);
    for (auto& z : pts) z = sampler.point_on_TH2();
    std::vector<PhasePoint> lower(n);
    for (auto& z : lower) z = sampler.point_on_V(true);

    const BracketTable table = dirac_table();
    std::vector<Polynomial> coords;
    for (std::size_t i = 0; i < kPhaseDim; ++i) coords.push_back(phase_coordinate(i));
    const Polynomial c1 = casimir_c1_polynomial(), c2 = casimir_c2_polynomial();

    auto guard = [&](const std::string& name, const std::function<SuiteResult()>& body) {
        try {
            if (n == 0) {
                rep.suites.push_back({name, 0, 0.0, 0.0, true, "vacuous: no samples"});
                return;
            }
            rep.suites.push_back(body());
        } catch (const std::exception& e) {
            rep.suites.push_back({name, 0, std::nan(""), 0.0, false, std::string("error: ") + e.what()});
        }
    };

    guard("dirac_table", [&] {
        return pointwise("dirac_table", 2 * n, tol.identity, backend, [&](std::size_t k) {
            const PhasePoint& z = k < n ? pts[k] : lower[k - n];
            const Vec6 c = z.coords();
            double m = 0.0;
            for (std::size_t i = 0; i < kPhaseDim; ++i)
                for (std::size_t j = i + 1; j < kPhaseDim; ++j)
                    m = std::max(m, std::abs(dirac_bracket(coords[i], coords[j], z, tol) - table.value(i, j, c)));
            return m;
        });
    });

    guard("casimirs", [&] {
        return pointwise("casimirs", n, tol.identity, backend, [&](std::size_t k) {
            double m = 0.0;
            for (const auto& cas : {c1, c2})
                for (const auto& zj : coords) m = std::max(m, std::abs(dirac_bracket(cas, zj, pts[k], tol)));
            return m;
        });
    });

    guard("dirac_jacobi", [&] {
        return pointwise("dirac_jacobi", n, tol.identity, backend, [&](std::size_t k) { return table.max_jacobi(pts[k].coords()); });
    });

    guard("antisymmetry", [&] {
        SuiteResult r{"antisymmetry", 1, 0.0, 0.0, table.is_antisymmetric(), "structural check of the Dirac table"};
        for (RotationClass cls : RotationClass::all()) r.passed = r.passed && reduced_table(cls).is_antisymmetric();
        r.max_residual = r.passed ? 0.0 : 1.0;
        return r;
    });

    for (RotationClass cls : RotationClass::all()) {
        const std::string tag = std::string(cls.name());
        const Potential lin = Potential::linear(1.0);
        const Potential quad = quadratic_test_potential(cls);

        guard("invariant_ideal/" + tag, [&] {
            const PhaseVectorField f = [&](const PhasePoint& z) { return vector_field(cls, quad, z); };
            const std::vector<Polynomial> ideal{c1, c2};
            return from_certificate("invariant_ideal/" + tag, certify_invariant_ideal(f, ideal, pts, tol, backend));
        });

        guard("reduced_bracket/" + tag, [&] {
            return from_certificate("reduced_bracket/" + tag,
                                    certify_reduced_bracket(hilbert_generators(cls, tol), table, reduced_table(cls), pts, tol, backend));
        });

        guard("relations/" + tag, [&] {
            const CertificateReport a = certify_relations(invariant_generators(cls), pts, tol, backend);
            const CertificateReport b = certify_relations(hilbert_generators(cls, tol), pts, tol, backend);
            SuiteResult r = from_certificate("relations/" + tag, a);
            r.max_residual = std::max(a.max_residual, b.max_residual);
            r.passed = a.passed && b.passed;
            r.detail = "invariants+restrictions and variety relation";
            return r;
        });

        guard("momentum_integral/" + tag, [&] {
            const Polynomial j = momentum_polynomial(cls), h = hamiltonian_polynomial(cls, quad);
            return pointwise("momentum_integral/" + tag, n, tol.identity, backend,
                             [&](std::size_t k) { return std::abs(dirac_bracket(j, h, pts[k], tol)); });
        });

        guard("generator_is_hamiltonian/" + tag, [&] {
            const Polynomial j = momentum_polynomial(cls);
            return pointwise("generator_is_hamiltonian/" + tag, n, tol.identity, backend, [&](std::size_t k) {
                const Vec6 c = pts[k].coords();
                const std::vector<double> xi = hamiltonian_field(j, table, c);
                const Vec6 g = infinitesimal_generator(cls, pts[k]);
                double m = 0.0;
                for (std::size_t i = 0; i < kPhaseDim; ++i) m = std::max(m, std::abs(xi[i] - g[i]));
                return m;
            });
        });

        guard("hamiltonian_field/" + tag, [&] {
            const Polynomial h = hamiltonian_polynomial(cls, quad);
            return pointwise("hamiltonian_field/" + tag, n, tol.identity, backend, [&](std::size_t k) {
                const std::vector<double> xi = hamiltonian_field(h, table, pts[k].coords());
                const Vec6 f = vector_field(cls, quad, pts[k]);
                double m = 0.0;
                for (std::size_t i = 0; i < kPhaseDim; ++i) m = std::max(m, std::abs(xi[i] - f[i]));
                return m;
            });
        });

        std::vector<ReducedPoint> ws(n);
        for (std::size_t k = 0; k < n; ++k)
            ws[k] = (cls.kind() == RotationKind::Elliptic && k % 5 == 4) ? sampler.elliptic_boundary_point() : sampler.image_point(cls);
        guard("lift_roundtrip/" + tag, [&] {
            return pointwise("lift_roundtrip/" + tag, n, 1e-12, backend,
                             [&](std::size_t k) { return max_abs_diff(hilbert_map(cls, lift(cls, ws[k], tol)), ws[k]); });
        });

        guard("relation_preservation/" + tag, [&] {
            const std::vector<ReducedPoint> w = kernels::hilbert_batch(cls, pts, backend);
            return pointwise("relation_preservation/" + tag, n, tol.identity, backend,
                             [&](std::size_t k) { return std::abs(variety_residual(cls, w[k])); });
        });

        std::vector<double> params(n);
        for (auto& p : params) p = sampler.group_parameter(cls);
        guard("orbit_invariance/" + tag, [&] {
            return pointwise("orbit_invariance/" + tag, n, tol.identity, backend, [&](std::size_t k) {
                return max_abs_diff(hilbert_map(cls, act(cls, params[k], pts[k])), hilbert_map(cls, pts[k]));
            });
        });

        // Flow suites: short horizons keep `verify` fast; the acceptance suite runs the long ones.
        std::vector<PhasePoint> starts(ntraj);
        std::vector<double> gparams(ntraj);
        for (std::size_t k = 0; k < ntraj; ++k) {
            starts[k] = sampler.generic_initial_condition(cls);
            gparams[k] = sampler.group_parameter(cls);
        }
        const long steps = std::lround(opts.flow_time / opts.dt);

        guard("commutation/" + tag, [&] {
            SuiteResult r = pointwise("commutation/" + tag, ntraj, 1e-6, backend, [&](std::size_t k) {
                const Trajectory full = integrate(cls, quad, starts[k], opts.dt, steps, tol);
                const ReducedTrajectory red =
                    integrate_reduced(cls, quad, hilbert_map(cls, starts[k]), opts.dt, steps, {}, tol);
                double m = 0.0;
                for (std::size_t i = 0; i < full.size(); ++i) m = std::max(m, max_abs_diff(hilbert_map(cls, full.z[i]), red.w[i]));
                return m;
            });
            std::ostringstream d;
            d << "quadratic potential, T = " << opts.flow_time;
            r.detail = d.str();
            return r;
        });

        guard("equivariance/" + tag, [&] {
            return pointwise("equivariance/" + tag, ntraj, 1e-6, backend, [&](std::size_t k) {
                const PhasePoint a = flow(cls, lin, act(cls, gparams[k], starts[k]), opts.dt, steps);
                const PhasePoint b = act(cls, gparams[k], flow(cls, lin, starts[k], opts.dt, steps));
                return max_abs_diff(a.coords(), b.coords());
            });
        });

        guard("conservation/" + tag, [&] {
            const std::vector<kernels::EnsembleStats> stats = kernels::integrate_ensemble(cls, quad, starts, opts.dt, steps, backend);
            SuiteResult r{"conservation/" + tag, ntraj, 0.0, tol.drift, true, {}};
            for (const auto& s : stats) {
                if (s.failed) {
                    r.passed = false;
                    r.detail = s.error;
                    r.max_residual = std::nan("");
                    return r;
                }
                r.max_residual = std::max({r.max_residual, s.max_energy_drift, s.max_momentum_drift});
                if (s.max_casimir_residual > tol.constraint) r.passed = false;
            }
            r.passed = r.passed && r.max_residual <= tol.drift;
            std::ostringstream d;
            d << "energy and momentum drift; casimirs <= " << tol.constraint;
            r.detail = d.str();
            return r;
        });
    }

    if (opts.corrupt_bracket) {
        guard("planted_corruption/elliptic", [&] {
            const RotationClass cls = RotationKind::Elliptic;
            SuiteResult r = from_certificate("planted_corruption/elliptic",
                                             certify_reduced_bracket(hilbert_generators(cls, tol), table, corrupted(reduced_table(cls)), pts,
                                                                     tol, backend));
            r.detail = "sign of {w1,w2}' flipped on purpose; " + r.detail;
            return r;
        });
        rep.warnings.push_back("corrupted-bracket self-test enabled: planted_corruption is expected to FAIL");
    }
    return rep;
}

void print_verification(std::ostream& os, const VerifyReport& report)
{
    for (const auto& w : report.warnings) os << "WARNING " << w << '\n';
    for (const auto& s : report.suites) {
        std::ostringstream line;
        line.precision(3);
        line << (s.passed ? "PASS " : "FAIL ") << s.name << " samples=" << s.samples << " max=" << s.max_residual << " tol=" << s.tolerance;
        if (!s.detail.empty()) line << " (" << s.detail << ")";
        os << line.str() << '\n';
    }
    os << (report.all_passed() ? "verify: all suites passed" : "verify: FAILURES") << " (seed " << report.seed << ")\n";
}

}  // namespace hyperpend
