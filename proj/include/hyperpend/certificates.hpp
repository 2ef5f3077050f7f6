#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hyperpend/brackets.hpp"
#include "hyperpend/kernels.hpp"
#include "hyperpend/minkowski.hpp"
#include "hyperpend/polynomial.hpp"
#include "hyperpend/tolerances.hpp"

namespace hyperpend {

// Components of a Hilbert map together with the relations among them and a
// semialgebraic description of the image.
struct GeneratorSet {
    std::vector<Polynomial> generators;  // phase-space polynomials
    std::vector<Polynomial> relations;   // polynomials in generators.size() variables
    std::function<bool(std::span<const double>)> image_predicate;

    std::size_t size() const { return generators.size(); }
    std::vector<double> evaluate(const PhasePoint& z) const;
};

struct CertificateReport {
    std::string name;
    std::size_t samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

using PhaseVectorField = std::function<Vec6(const PhasePoint&)>;

// Checks the invariance criterion for V under the flow of f: L_f(psi) must
// vanish on the samples for every generator psi of the ideal.
// Throws InvalidParameter when `samples` is empty.
CertificateReport certify_invariant_ideal(const PhaseVectorField& f, std::span<const Polynomial> ideal_gens,
                                          std::span<const PhasePoint> samples, const Tolerances& tol = {},
                                          kernels::Backend backend = kernels::Backend::OpenMP);

// Checks {gamma_i, gamma_j}(z) = gamma'_ij(Gamma(z)) for every pair and every
// sample, and the Jacobi identity of the reduced table at Gamma(samples).
// `detail` reports the two maxima separately.
CertificateReport certify_reduced_bracket(const GeneratorSet& gens, const BracketTable& table, const BracketTable& reduced_table,
                                          std::span<const PhasePoint> samples, const Tolerances& tol = {},
                                          kernels::Backend backend = kernels::Backend::OpenMP);

// Each relation composed with the generators, evaluated on the samples.
CertificateReport certify_relations(const GeneratorSet& gens, std::span<const PhasePoint> samples, const Tolerances& tol = {},
                                    kernels::Backend backend = kernels::Backend::OpenMP);

}  // namespace hyperpend
