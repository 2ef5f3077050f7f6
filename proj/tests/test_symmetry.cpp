#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hyperpend/brackets.hpp"
#include "hyperpend/potential.hpp"
#include "hyperpend/reduction.hpp"
#include "hyperpend/sampling.hpp"
#include "hyperpend/symmetry.hpp"
#include "test_helpers.hpp"

using namespace hyperpend;

namespace {

double max_abs_diff(const Mat3& a, const Mat3& b)
{
    double m = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
    return m;
}

const Mat3 kIdentity{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

}  // namespace

TEST_CASE("group matrices: displayed values")
{
    const Mat3 e = group_matrix(RotationKind::Elliptic, std::numbers::pi / 2);
    CHECK(max_abs_diff(e, Mat3{{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}}) < 1e-15);
    const Mat3 p = group_matrix(RotationKind::Parabolic, 1.0);
    CHECK(max_abs_diff(p, Mat3{{{1, -1, 1}, {1, 0.5, 0.5}, {1, -0.5, 1.5}}}) < 1e-15);
    for (RotationClass cls : RotationClass::all()) CHECK(max_abs_diff(group_matrix(cls, 0.0), kIdentity) == 0.0);
}

TEST_CASE("group law, determinant and metric preservation")
{
    Sampler s(21);
    for (RotationClass cls : RotationClass::all()) {
        for (int k = 0; k < 100; ++k) {
            const double a = s.uniform(-2, 2), b = s.uniform(-2, 2);
            const Mat3 ab = multiply(group_matrix(cls, a), group_matrix(cls, b));
            CHECK(max_abs_diff(ab, group_matrix(cls, a + b)) <= 1e-9 * (1.0 + std::cosh(std::abs(a) + std::abs(b))) * 10);
            CHECK(determinant(group_matrix(cls, a)) == doctest::Approx(1.0).epsilon(1e-12));
            const MinkVec u{s.uniform(-2, 2), s.uniform(-2, 2), s.uniform(-2, 2)};
            const MinkVec v{s.uniform(-2, 2), s.uniform(-2, 2), s.uniform(-2, 2)};
            const Mat3 r = group_matrix(cls, a);
            CHECK(lorentz_inner(apply(r, u), apply(r, v)) == doctest::Approx(lorentz_inner(u, v)).epsilon(1e-9));
            const PhasePoint z = s.point_on_TH2();
            CHECK(apply(r, z.x).x3 > 0.0);
        }
    }
}

TEST_CASE("fixed lines")
{
    Sampler s(22);
    for (int k = 0; k < 20; ++k) {
        const double lam = s.uniform(-3, 3), t = s.uniform(-2, 2);
        CHECK(testing::max_abs_diff(apply(group_matrix(RotationKind::Elliptic, t), {0, 0, lam}), {0, 0, lam}) < 1e-14);
        CHECK(testing::max_abs_diff(apply(group_matrix(RotationKind::Hyperbolic, t), {lam, 0, 0}), {lam, 0, 0}) < 1e-14);
        CHECK(testing::max_abs_diff(apply(group_matrix(RotationKind::Parabolic, t), {0, lam, lam}), {0, lam, lam}) < 1e-13);
    }
}

TEST_CASE("action on phase space")
{
    const PhasePoint apex{{0, 0, 1}, {0, 0, 0}};
    CHECK(act(RotationKind::Elliptic, 1.234, apex) == apex);
    Sampler s(23);
    for (RotationClass cls : RotationClass::all()) {
        for (int k = 0; k < 50; ++k) {
            const PhasePoint z = s.point_on_TH2();
            CHECK(act(cls, 0.0, z) == z);
            const double t = s.group_parameter(cls);
            const PhasePoint g = act(cls, t, z);
            CHECK(on_TH2(g, 1e-9));
            CHECK(testing::max_abs_diff(hilbert_map(cls, g), hilbert_map(cls, z)) <= 1e-9);
            // Potentials depend on the invariant coordinate only.
            CHECK(cls.invariant_coordinate(g.x) == doctest::Approx(cls.invariant_coordinate(z.x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("infinitesimal generators")
{
    const PhasePoint z{{1, 0, std::sqrt(2.0)}, {0, 0, 0}};
    const Vec6 g = infinitesimal_generator(RotationKind::Elliptic, z);
    CHECK(testing::max_abs_diff(g, Vec6{0, 1, 0, 0, 0, 0}) < 1e-15);

    Sampler s(24);
    const BracketTable table = dirac_table();
    for (RotationClass cls : RotationClass::all()) {
        for (int k = 0; k < 50; ++k) {
            const PhasePoint p = s.point_on_TH2();
            const double h = 1e-4;
            const Vec6 a = act(cls, h, p).coords(), b = act(cls, -h, p).coords();
            Vec6 fd{};
            for (std::size_t i = 0; i < 6; ++i) fd[i] = (a[i] - b[i]) / (2 * h);
            CHECK(testing::max_abs_diff(fd, infinitesimal_generator(cls, p)) < 1e-6);
            const auto xi = hamiltonian_field(momentum_polynomial(cls), table, p.coords());
            const Vec6 gen = infinitesimal_generator(cls, p);
            for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(xi[i] - gen[i]) < 1e-9);
        }
    }
}

TEST_CASE("momentum maps")
{
    CHECK(momentum_map(RotationKind::Elliptic, {{0, 0, 1}, {0, 0, 0}}) == 0.0);
    CHECK(momentum_map(RotationKind::Hyperbolic, {{0, 0, 1}, {0, 1, 0}}) == 1.0);
    Sampler s(25);
    for (RotationClass cls : RotationClass::all()) {
        for (int k = 0; k < 50; ++k) {
            const PhasePoint z = s.point_on_TH2();
            CHECK(momentum_map(cls, z) == doctest::Approx(hilbert_map(cls, z).w4).epsilon(1e-14));
            CHECK(momentum_polynomial(cls)(z.coords()) == doctest::Approx(momentum_map(cls, z)).epsilon(1e-14));
            // J is invariant under its own group.
            CHECK(momentum_map(cls, act(cls, s.group_parameter(cls), z)) == doctest::Approx(momentum_map(cls, z)).epsilon(1e-9));
        }
    }
}

TEST_CASE("orbit sweeps")
{
    Sampler s(26);
    const PhasePoint z = s.point_on_TH2();
    std::vector<double> params;
    for (int k = 0; k < 64; ++k) params.push_back(2 * std::numbers::pi * k / 64.0);
    for (RotationClass cls : RotationClass::all()) {
        const auto pts = orbit_points(cls, z, params);
        REQUIRE(pts.size() == params.size());
        for (const auto& p : pts) {
            CHECK(on_TH2(p, 1e-8));
            CHECK(testing::max_abs_diff(hilbert_map(cls, p), hilbert_map(cls, z)) <= 1e-9 * (1.0 + std::abs(p.x.x3)) * 100);
        }
        const std::vector<double> zero{0.0};
        CHECK(orbit_points(cls, z, zero).front() == z);
    }
    // The elliptic orbit closes after a full turn.
    CHECK(testing::max_abs_diff(act(RotationKind::Elliptic, 2 * std::numbers::pi, z).coords(), z.coords()) < 1e-12);
}

TEST_CASE("parabolic orbits are parabolas")
{
    Sampler s(27);
    for (int k = 0; k < 50; ++k) {
        const PhasePoint z = s.point_on_TH2();
        const auto d = parabolic_orbit_decomposition(z);
        CHECK(z.x.x3 - z.x.x2 != 0.0);  // quadratic coefficient never vanishes on H^2
        for (double t : {-1.5, 0.5, 2.0}) {
            const Vec6 a = act(RotationKind::Parabolic, t, z).coords();
            Vec6 b{};
            for (std::size_t i = 0; i < 6; ++i) b[i] = d.base[i] + t * d.linear[i] + 0.5 * t * t * d.quadratic[i];
            CHECK(testing::max_abs_diff(a, b) < 1e-12 * (1 + t * t) * 10);
        }
    }
}

TEST_CASE("orbit normalization")
{
    Sampler s(28);
    for (RotationClass cls : RotationClass::all()) {
        for (int k = 0; k < 50; ++k) {
            const PhasePoint z = s.point_on_TH2();
            const PhasePoint n = normalize_orbit(cls, z);
            CHECK(testing::max_abs_diff(hilbert_map(cls, n), hilbert_map(cls, z)) < 1e-9);
            const PhasePoint m = normalize_orbit(cls, act(cls, s.group_parameter(cls), z));
            CHECK(testing::max_abs_diff(n.coords(), m.coords()) < 1e-8);
        }
    }
}

TEST_CASE("class names parse")
{
    CHECK(RotationClass::parse("elliptic") == RotationKind::Elliptic);
    CHECK(RotationClass::parse("hyperbolic").name() == "hyperbolic");
    CHECK_THROWS(RotationClass::parse("loxodromic"));
}
