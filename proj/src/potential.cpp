#include "hyperpend/potential.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperpend/errors.hpp"

namespace hyperpend {

namespace {

double horner(const std::vector<double>& c, double s)
{
    double r = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * s + *it;
    return r;
}

std::vector<double> differentiate(const std::vector<double>& c)
{
    if (c.size() <= 1) return {};
    std::vector<double> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * double(k);
    return d;
}

void trim(std::vector<double>& c)
{
    while (!c.empty() && c.back() == 0.0) c.pop_back();
}

Polynomial univariate_in(const std::vector<double>& c, const Polynomial& s)
{
    Polynomial r(s.num_vars());
    Polynomial power = Polynomial::constant(s.num_vars(), 1.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] != 0.0) r += power * c[k];
        if (k + 1 < c.size()) power *= s;
    }
    return r;
}

}  // namespace

Potential::Potential(std::vector<double> coefficients) : num_(std::move(coefficients)) { trim(num_); }

Potential::Potential(std::vector<double> numerator, std::vector<double> denominator, double pole_guard)
    : num_(std::move(numerator)), den_(std::move(denominator)), pole_guard_(pole_guard)
{
    trim(num_);
    trim(den_);
    if (den_.empty()) throw InvalidParameter("Potential: denominator is identically zero");
    if (den_.size() == 1) {
        // Constant denominator: fold it into the numerator.
        for (auto& a : num_) a /= den_[0];
        den_.clear();
    }
}

bool Potential::is_identically_zero() const { return num_.empty(); }

void Potential::check_pole(double d) const
{
    if (std::abs(d) < pole_guard_) throw PoleError("Potential: evaluated at a pole of the rational potential");
}

double Potential::value(double s) const
{
    if (is_polynomial()) return horner(num_, s);
    const double d = horner(den_, s);
    check_pole(d);
    return horner(num_, s) / d;
}

double Potential::derivative(double s) const
{
    if (is_polynomial()) return horner(differentiate(num_), s);
    const double n = horner(num_, s), d = horner(den_, s);
    check_pole(d);
    const double dn = horner(differentiate(num_), s), dd = horner(differentiate(den_), s);
    return (dn * d - n * dd) / (d * d);
}

double Potential::second_derivative(double s) const
{
    if (is_polynomial()) return horner(differentiate(differentiate(num_)), s);
    const double n = horner(num_, s), d = horner(den_, s);
    check_pole(d);
    const auto dnum = differentiate(num_), dden = differentiate(den_);
    const double dn = horner(dnum, s), dd = horner(dden, s);
    const double ddn = horner(differentiate(dnum), s), ddd = horner(differentiate(dden), s);
    // (n/d)'' = n''/d - 2 n' d'/d^2 - n d''/d^2 + 2 n d'^2/d^3
    return ddn / d - 2.0 * dn * dd / (d * d) - n * ddd / (d * d) + 2.0 * n * dd * dd / (d * d * d);
}

Polynomial Potential::compose_with(RotationClass cls) const
{
    if (!is_polynomial()) throw InvalidParameter("Potential: rational potentials have no polynomial form");
    return univariate_in(num_, cls.invariant_polynomial());
}

Polynomial Potential::reduced_polynomial() const
{
    if (!is_polynomial()) throw InvalidParameter("Potential: rational potentials have no polynomial form");
    return univariate_in(num_, reduced_coordinate(0));
}

Polynomial hamiltonian_polynomial(RotationClass cls, const Potential& u)
{
    const auto y1 = phase_coordinate(3), y2 = phase_coordinate(4), y3 = phase_coordinate(5);
    return 0.5 * (y1 * y1 + y2 * y2 - y3 * y3) + u.compose_with(cls);
}

}  // namespace hyperpend
