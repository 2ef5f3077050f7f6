#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpend/minkowski.hpp"
#include "hyperpend/polynomial.hpp"

namespace hyperpend {

enum class RotationKind { Elliptic, Hyperbolic, Parabolic };

using Mat3 = std::array<std::array<double, 3>, 3>;

MinkVec apply(const Mat3& m, const MinkVec& v);
Mat3 multiply(const Mat3& a, const Mat3& b);
double determinant(const Mat3& m);

// One of the three one-parameter subgroups of Lor(2,1) fixing a line, with
// the data every later stage is parameterized by:
//   q(w)  : w^2 - 1, w^2 + 1, w^2
//   s(x)  : x3, x1, x2 - x3 (the invariant the potential depends on)
class RotationClass {
public:
    constexpr RotationClass(RotationKind kind) : kind_(kind) {}

    static RotationClass parse(std::string_view name);
    static constexpr std::array<RotationKind, 3> all() { return {RotationKind::Elliptic, RotationKind::Hyperbolic, RotationKind::Parabolic}; }

    RotationKind kind() const { return kind_; }
    std::string_view name() const;

    double q(double w) const;
    double q_prime(double w) const;
    Polynomial q_polynomial() const;  // in one variable

    double invariant_coordinate(const MinkVec& x) const;
    double invariant_velocity(const MinkVec& y) const { return invariant_coordinate(y); }
    // grad_L s, constant because s is linear.
    MinkVec invariant_gradient() const;
    // s as a phase-space polynomial.
    Polynomial invariant_polynomial() const;

    // The line fixed pointwise by the group, spanned by this vector.
    MinkVec fixed_direction() const;

    friend bool operator==(RotationClass a, RotationClass b) { return a.kind_ == b.kind_; }

private:
    RotationKind kind_;
};

Mat3 group_matrix(RotationClass cls, double param);

// Diagonal action (x, y) -> (R x, R y).
PhasePoint act(RotationClass cls, double param, const PhasePoint& z);

// d/dparam act(cls, param, z) at param = 0:
//   elliptic   x' = -x x_L e3
//   hyperbolic x' =  x x_L e1
//   parabolic  x' = -x x_L (e2 + e3)
// and the same for y.
Vec6 infinitesimal_generator(RotationClass cls, const PhasePoint& z);

// J_e = x1 y2 - x2 y1, J_h = x3 y2 - x2 y3, J_p = x1 (y2 - y3) + y1 (x3 - x2).
double momentum_map(RotationClass cls, const PhasePoint& z);
Polynomial momentum_polynomial(RotationClass cls);

std::vector<PhasePoint> orbit_points(RotationClass cls, const PhasePoint& z, std::span<const double> params);

// Affine decomposition of a parabolic orbit:
//   act(P, t, z) = z + t * linear + t^2/2 * quadratic.
struct ParabolicOrbitDecomposition {
    Vec6 base;
    Vec6 linear;
    Vec6 quadratic;
};
ParabolicOrbitDecomposition parabolic_orbit_decomposition(const PhasePoint& z);

// Canonical representative of the group orbit of a point of T H^2:
//   elliptic   : (x1, x2) rotated onto x2 = 0, x1 >= 0; at the apex,
//                (y1, y2) rotated onto y2 = 0, y1 >= 0
//   hyperbolic : x2 = 0
//   parabolic  : x1 = 0
PhasePoint normalize_orbit(RotationClass cls, const PhasePoint& z);

// Group parameter carrying z to its canonical representative.
double normalizing_parameter(RotationClass cls, const PhasePoint& z);

}  // namespace hyperpend
