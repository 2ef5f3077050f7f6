#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hyperpend {

// Sparse multivariate polynomial over a fixed number of variables.
//
// Terms are kept in a map keyed by exponent vectors; zero coefficients are
// never stored, so two polynomials are equal iff their term maps are equal.
// Coefficients are doubles. Every polynomial the library builds has small
// integer (or dyadic) coefficients, which doubles represent exactly, so
// structural comparisons such as antisymmetry of a bracket table are exact.
class Polynomial {
public:
    static constexpr std::size_t kMaxVars = 8;
    using Exponents = std::array<std::uint8_t, kMaxVars>;

    explicit Polynomial(std::size_t nvars = 0);

    static Polynomial constant(std::size_t nvars, double c);
    static Polynomial variable(std::size_t nvars, std::size_t index);

    std::size_t num_vars() const { return nvars_; }
    const std::map<Exponents, double>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    double operator()(std::span<const double> point) const;
    double evaluate(std::span<const double> point) const { return (*this)(point); }

    Polynomial derivative(std::size_t var) const;

    // Substitutes subs[i] for variable i. All substitutes must share one
    // variable count, which becomes the variable count of the result.
    Polynomial compose(std::span<const Polynomial> subs) const;

    Polynomial pow(unsigned n) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(double s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
    friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
    friend Polynomial operator+(Polynomial a, double c);
    friend Polynomial operator-(Polynomial a, double c) { return std::move(a) + (-c); }
    friend Polynomial operator-(Polynomial a) { return a *= -1.0; }
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    // Human-readable form, e.g. "x1^2 - 2*x1*y2 + 1". Names default to
    // v1..vn when not supplied.
    std::string to_string(std::span<const std::string> names = {}) const;

private:
    void add_term(const Exponents& e, double c);
    void require_same_vars(const Polynomial& other) const;

    std::size_t nvars_;
    std::map<Exponents, double> terms_;
};

// Phase-space coordinates z = (x1, x2, x3, y1, y2, y3) as polynomials in six
// variables, indexed 0..5 in that order.
inline constexpr std::size_t kPhaseDim = 6;
Polynomial phase_coordinate(std::size_t index);

// Reduced coordinates w = (w1, w2, w3, w4), indexed 0..3.
inline constexpr std::size_t kReducedDim = 4;
Polynomial reduced_coordinate(std::size_t index);

}  // namespace hyperpend
