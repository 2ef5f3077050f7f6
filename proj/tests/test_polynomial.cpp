#include <doctest.h>

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "hyperpend/polynomial.hpp"

using hyperpend::Polynomial;

TEST_CASE("polynomial arithmetic and evaluation")
{
    const Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    const Polynomial p = x * x - 2.0 * x * y + 1.0;
    const std::array<double, 2> at{3.0, 0.5};
    CHECK(p(at) == doctest::Approx(9.0 - 3.0 + 1.0));
    CHECK(p.degree() == 2);
    CHECK((p - p).is_zero());
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + 1.0).pow(3)(at) == doctest::Approx(64.0));
}

TEST_CASE("derivative matches central differences")
{
    const Polynomial x = Polynomial::variable(3, 0), y = Polynomial::variable(3, 1), z = Polynomial::variable(3, 2);
    const Polynomial p = x * x * y - 3.0 * y * z * z + x * z + 7.0;
    const std::array<double, 3> at{0.7, -1.3, 2.1};
    const double h = 1e-5;
    for (std::size_t k = 0; k < 3; ++k) {
        auto plus = at, minus = at;
        plus[k] += h;
        minus[k] -= h;
        const double fd = (p(plus) - p(minus)) / (2 * h);
        CHECK(p.derivative(k)(at) == doctest::Approx(fd).epsilon(1e-8));
    }
}

TEST_CASE("composition substitutes polynomials for variables")
{
    const Polynomial w = Polynomial::variable(1, 0);
    const Polynomial q = w * w - 1.0;  // q(w) = w^2 - 1
    const Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    const std::vector<Polynomial> subs{x + y};
    const Polynomial r = q.compose(subs);
    CHECK(r == x * x + 2.0 * x * y + y * y - 1.0);
}

TEST_CASE("structural equality ignores cancelled terms")
{
    const Polynomial x = Polynomial::variable(1, 0);
    CHECK((x * 2.0 - x - x).is_zero());
    CHECK(Polynomial::constant(1, 0.0).is_zero());
    CHECK_FALSE(x == x + 1.0);
}

TEST_CASE("to_string is readable")
{
    const Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    const std::vector<std::string> names{"x", "y"};
    CHECK((x * x - 2.0 * x * y + 1.0).to_string(names) == "x^2 - 2*x*y + 1");
    CHECK(Polynomial(2).to_string() == "0");
}

TEST_CASE("mismatched variable counts are rejected")
{
    const Polynomial a = Polynomial::variable(2, 0), b = Polynomial::variable(3, 0);
    CHECK_THROWS(a + b);
    CHECK_THROWS(Polynomial::variable(2, 2));
}
