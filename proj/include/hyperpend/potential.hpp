#pragma once

#include <vector>

#include "hyperpend/polynomial.hpp"
#include "hyperpend/symmetry.hpp"
#include "hyperpend/tolerances.hpp"

namespace hyperpend {

// U(s) as a univariate polynomial, or as a ratio numerator/denominator.
// Coefficients are in ascending order: {a0, a1, a2} is a0 + a1 s + a2 s^2.
class Potential {
public:
    Potential() = default;
    explicit Potential(std::vector<double> coefficients);
    Potential(std::vector<double> numerator, std::vector<double> denominator, double pole_guard = Tolerances{}.degenerate);

    static Potential zero() { return Potential(std::vector<double>{}); }
    static Potential linear(double c) { return Potential({0.0, c}); }

    bool is_polynomial() const { return den_.empty(); }
    bool is_identically_zero() const;
    const std::vector<double>& numerator() const { return num_; }
    const std::vector<double>& denominator() const { return den_; }

    // Throw PoleError within pole_guard of a denominator zero.
    double value(double s) const;
    double derivative(double s) const;
    double second_derivative(double s) const;

    // U(s(x)) as a phase-space polynomial. Polynomial potentials only.
    Polynomial compose_with(RotationClass cls) const;
    // U as a polynomial in the reduced coordinate w1 (four variables).
    Polynomial reduced_polynomial() const;

private:
    void check_pole(double d) const;

    std::vector<double> num_;
    std::vector<double> den_;
    double pole_guard_ = Tolerances{}.degenerate;
};

// H = 1/2 <y,y>_L + U(s(x)) as a phase-space polynomial.
Polynomial hamiltonian_polynomial(RotationClass cls, const Potential& u);

}  // namespace hyperpend
