#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "hyperpend/dynamics.hpp"
#include "hyperpend/errors.hpp"
#include "hyperpend/potential.hpp"
#include "hyperpend/sampling.hpp"
#include "test_helpers.hpp"

using namespace hyperpend;

TEST_CASE("potential evaluation")
{
    const Potential u({1.0, -2.0, 0.5, 3.0});
    Sampler s(31);
    for (int k = 0; k < 50; ++k) {
        const double x = s.uniform(-3, 3), h = 1e-5;
        CHECK(u.derivative(x) == doctest::Approx((u.value(x + h) - u.value(x - h)) / (2 * h)).epsilon(1e-7));
        CHECK(u.second_derivative(x) == doctest::Approx((u.derivative(x + h) - u.derivative(x - h)) / (2 * h)).epsilon(1e-7));
    }
    CHECK(Potential::zero().is_identically_zero());
    CHECK(Potential({0.0, 0.0}).is_identically_zero());
    const Potential r({1.0}, {0.0, 1.0});  // 1/s
    CHECK(r.value(2.0) == 0.5);
    CHECK(r.derivative(2.0) == doctest::Approx(-0.25));
    CHECK_THROWS_AS(r.value(0.0), PoleError);
}

TEST_CASE("vector field examples")
{
    const PhasePoint z{{0, 0, 1}, {1, 0, 0}};
    const Vec6 f = vector_field(RotationKind::Elliptic, Potential::zero(), z);
    CHECK(testing::max_abs_diff(f, Vec6{1, 0, 0, 0, 0, 1}) < 1e-15);

    // Elliptic U = c x3: grad_L U = (0, 0, -c), <x, grad_L U> = c x3, so
    // y' = (0, 0, c) + x (<y,y> - c x3); this sign is what keeps <x,y> = 0.
    Sampler s(32);
    const double c = 0.7;
    for (int k = 0; k < 20; ++k) {
        const PhasePoint p = s.point_on_TH2();
        const Vec6 g = vector_field(RotationKind::Elliptic, Potential::linear(c), p);
        const double lam = lorentz_inner(p.y, p.y) - c * p.x.x3;
        const Vec6 expect{p.y.x1, p.y.x2, p.y.x3, p.x.x1 * lam, p.x.x2 * lam, c + p.x.x3 * lam};
        CHECK(testing::max_abs_diff(g, expect) < 1e-12);
    }
    // y = 0 and a critical point of U: the field vanishes.
    const Potential well({0.0, 0.0, 1.0});  // U = s^2, critical at s = 0 (hyperbolic x1 = 0)
    const Vec6 h = vector_field(RotationKind::Hyperbolic, well, {{0, 0.3, std::sqrt(1.09)}, {0, 0, 0}});
    CHECK(testing::max_abs_diff(h, Vec6{}) < 1e-15);
}

TEST_CASE("geodesic oracle")
{
    const PhasePoint z0{{0, 0, 1}, {1, 0, 0}};
    const Trajectory tr = integrate(RotationKind::Elliptic, Potential::zero(), z0, 1e-3, 5000);
    double err = 0.0;
    for (std::size_t i = 0; i < tr.size(); ++i) {
        const double t = tr.t[i];
        err = std::max(err, testing::max_abs_diff(tr.z[i].x, {std::sinh(t), 0, std::cosh(t)}));
    }
    CHECK(err <= 1e-6);
}

TEST_CASE("conservation along trajectories")
{
    Sampler s(33);
    for (RotationClass cls : RotationClass::all()) {
        // Linear potentials blow up in finite time from generic data in the
        // noncompact classes, so they start on bounded orbits.
        for (const bool linear : {true, false}) {
            const Potential u = linear ? Potential::linear(1.0) : quadratic_test_potential(cls);
            const PhasePoint z0 = linear ? s.bounded_initial_condition(cls, 1.0) : s.generic_initial_condition(cls);
            const Trajectory tr = integrate(cls, u, z0, 1e-3, 3000);
            CHECK(tr.max_energy_drift() <= 1e-8);
            CHECK(tr.max_momentum_drift() <= 1e-8);
            CHECK(tr.max_casimir_residual() <= 1e-10);
        }
    }
    // Elliptic U = x3 over T = 10.
    const PhasePoint z0 = s.bounded_initial_condition(RotationKind::Elliptic, 1.0);
    const Trajectory tr = integrate(RotationKind::Elliptic, Potential::linear(1.0), z0, 1e-3, 10000);
    CHECK(tr.max_energy_drift() <= 1e-8);
    CHECK(tr.max_momentum_drift() <= 1e-8);
}

TEST_CASE("equivariance of the flow")
{
    Sampler s(34);
    for (RotationClass cls : RotationClass::all()) {
        const Potential u = quadratic_test_potential(cls);
        for (int k = 0; k < 3; ++k) {
            const PhasePoint z0 = s.generic_initial_condition(cls);
            const double g = s.group_parameter(cls);
            const PhasePoint a = flow(cls, u, act(cls, g, z0), 1e-3, 1000);
            const PhasePoint b = act(cls, g, flow(cls, u, z0, 1e-3, 1000));
            CHECK(testing::max_abs_diff(a.coords(), b.coords()) <= 1e-6);
        }
    }
}

TEST_CASE("integration preconditions and failures")
{
    const PhasePoint z0{{0, 0, 1}, {1, 0, 0}};
    const Trajectory one = integrate(RotationKind::Elliptic, Potential::zero(), z0, 1e-3, 0);
    CHECK(one.size() == 1);
    CHECK(one.z[0] == z0);
    CHECK_THROWS_AS(integrate(RotationKind::Elliptic, Potential::zero(), z0, 0.0, 10), InvalidParameter);
    CHECK_THROWS_AS(integrate(RotationKind::Elliptic, Potential::zero(), {{1, 0, 0}, {0, 0, 0}}, 1e-3, 10), InvalidParameter);
    // A huge step throws the trajectory off the chart.
    CHECK_THROWS_AS(integrate(RotationKind::Elliptic, Potential::zero(), {{0, 0, 1}, {50, 0, 0}}, 1.0, 10), StepFailure);
}

TEST_CASE("projection onto the tangent bundle")
{
    const PhasePoint p = project_to_TH2({{0.1, 0.2, 1.3}, {0.5, 0.1, 0.2}});
    CHECK(std::abs(casimir_c1(p)) < 1e-15);
    CHECK(std::abs(casimir_c2(p)) < 1e-15);
}

TEST_CASE("trajectory csv layout")
{
    const Trajectory tr = integrate(RotationKind::Hyperbolic, Potential::linear(1.0), {{0, 0, 1}, {0, 1, 0}}, 1e-2, 3);
    std::ostringstream os;
    write_trajectory_csv(os, tr);
    std::istringstream in(os.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,x1,x2,x3,y1,y2,y3,H,J,c1res,c2res");
    int rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == 4);
}

TEST_CASE("full-space equilibria")
{
    const FullEquilibria none = find_full_equilibria(RotationKind::Elliptic, Potential::zero());
    CHECK(none.everywhere);

    // Elliptic linear potential: only the apex.
    const FullEquilibria lin = find_full_equilibria(RotationKind::Elliptic, Potential::linear(1.0));
    REQUIRE(lin.invariant_values.size() == 1);
    CHECK(lin.invariant_values[0] == 1.0);

    // U'(2) = 0: the circle x3 = 2 consists of stationary points.
    const Potential u({0.0, -4.0, 1.0});
    const FullEquilibria circ = find_full_equilibria(RotationKind::Elliptic, u);
    bool found = false;
    for (double v : circ.invariant_values) found = found || std::abs(v - 2.0) < 1e-10;
    CHECK(found);
    for (const auto& p : circ.points) {
        CHECK(testing::max_abs_diff(vector_field(RotationKind::Elliptic, u, p), Vec6{}) < 1e-9);
        CHECK(on_TH2(p, 1e-10));
    }
}
