#include "hyperpend/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperpend/errors.hpp"

namespace hyperpend {

std::vector<double> GeneratorSet::evaluate(const PhasePoint& z) const
{
    const Vec6 c = z.coords();
    std::vector<double> out(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) out[i] = generators[i](c);
    return out;
}

CertificateReport certify_invariant_ideal(const PhaseVectorField& f, std::span<const Polynomial> ideal_gens,
                                          std::span<const PhasePoint> samples, const Tolerances& tol, kernels::Backend backend)
{
    if (samples.empty()) throw InvalidParameter("certify_invariant_ideal: empty sample set");
    for (const auto& g : ideal_gens)
        if (g.num_vars() != kPhaseDim) throw InvalidParameter("certify_invariant_ideal: generators must be phase-space polynomials");

    // Differentiate once; the loop only evaluates.
    std::vector<std::vector<Polynomial>> grads;
    for (const auto& g : ideal_gens) {
        std::vector<Polynomial> d;
        for (std::size_t i = 0; i < kPhaseDim; ++i) d.push_back(g.derivative(i));
        grads.push_back(std::move(d));
    }

    const double worst = kernels::max_over(
        samples.size(),
        [&](std::size_t k) {
            const PhasePoint& z = samples[k];
            const Vec6 c = z.coords();
            const Vec6 v = f(z);
            double m = 0.0;
            for (const auto& d : grads) {
                double s = 0.0;
                for (std::size_t i = 0; i < kPhaseDim; ++i) s += d[i](c) * v[i];
                m = std::max(m, std::abs(s));
            }
            return m;
        },
        backend);

    CertificateReport r;
    r.name = "invariant_ideal";
    r.samples = samples.size();
    r.max_residual = worst;
    r.tolerance = tol.identity;
    r.passed = worst <= tol.identity;
    return r;
}

CertificateReport certify_reduced_bracket(const GeneratorSet& gens, const BracketTable& table, const BracketTable& reduced_table,
                                          std::span<const PhasePoint> samples, const Tolerances& tol, kernels::Backend backend)
{
    const std::size_t r = gens.size();
    if (reduced_table.size() != r || reduced_table.num_vars() != r)
        throw InvalidParameter("certify_reduced_bracket: reduced table does not match the generator count");
    if (table.size() != kPhaseDim) throw InvalidParameter("certify_reduced_bracket: expected a phase-space bracket table");
    if (samples.empty()) throw InvalidParameter("certify_reduced_bracket: empty sample set");

    const double bracket_err = kernels::max_over(
        samples.size(),
        [&](std::size_t k) {
            const Vec6 c = samples[k].coords();
            const std::vector<double> w = gens.evaluate(samples[k]);
            double m = 0.0;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = i + 1; j < r; ++j) {
                    const double lhs = table.bracket(gens.generators[i], gens.generators[j], c);
                    const double rhs = reduced_table.value(i, j, w);
                    m = std::max(m, std::abs(lhs - rhs));
                }
            return m;
        },
        backend);

    const double jacobi_err = kernels::max_over(
        samples.size(), [&](std::size_t k) { return reduced_table.max_jacobi(gens.evaluate(samples[k])); }, backend);

    CertificateReport rep;
    rep.name = "reduced_bracket";
    rep.samples = samples.size();
    rep.max_residual = std::max(bracket_err, jacobi_err);
    if (std::isnan(bracket_err) || std::isnan(jacobi_err)) rep.max_residual = std::nan("");
    rep.tolerance = tol.identity;
    rep.passed = rep.max_residual <= tol.identity;
    std::ostringstream os;
    os << "pushforward=" << bracket_err << " jacobi=" << jacobi_err;
    rep.detail = os.str();
    return rep;
}

CertificateReport certify_relations(const GeneratorSet& gens, std::span<const PhasePoint> samples, const Tolerances& tol,
                                    kernels::Backend backend)
{
    if (samples.empty()) throw InvalidParameter("certify_relations: empty sample set");
    const double worst = kernels::max_over(
        samples.size(),
        [&](std::size_t k) {
            const std::vector<double> w = gens.evaluate(samples[k]);
            double m = 0.0;
            for (const auto& rel : gens.relations) m = std::max(m, std::abs(rel(w)));
            return m;
        },
        backend);
    CertificateReport r;
    r.name = "relations";
    r.samples = samples.size();
    r.max_residual = worst;
    r.tolerance = tol.identity;
    r.passed = worst <= tol.identity;
    return r;
}

}  // namespace hyperpend
