#include "hyperpend/symmetry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hyperpend/errors.hpp"

namespace hyperpend {

MinkVec apply(const Mat3& m, const MinkVec& v)
{
    MinkVec r;
    for (std::size_t i = 0; i < 3; ++i) r[i] = m[i][0] * v.x1 + m[i][1] * v.x2 + m[i][2] * v.x3;
    return r;
}

Mat3 multiply(const Mat3& a, const Mat3& b)
{
    Mat3 r{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

double determinant(const Mat3& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

RotationClass RotationClass::parse(std::string_view name)
{
    if (name == "elliptic" || name == "e") return RotationKind::Elliptic;
    if (name == "hyperbolic" || name == "h") return RotationKind::Hyperbolic;
    if (name == "parabolic" || name == "p") return RotationKind::Parabolic;
    throw InvalidParameter("unknown rotation class '" + std::string(name) + "'");
}

std::string_view RotationClass::name() const
{
    switch (kind_) {
    case RotationKind::Elliptic: return "elliptic";
    case RotationKind::Hyperbolic: return "hyperbolic";
    case RotationKind::Parabolic: return "parabolic";
    }
    return "?";
}

double RotationClass::q(double w) const
{
    switch (kind_) {
    case RotationKind::Elliptic: return w * w - 1.0;
    case RotationKind::Hyperbolic: return w * w + 1.0;
    case RotationKind::Parabolic: return w * w;
    }
    return 0.0;
}

double RotationClass::q_prime(double w) const { return 2.0 * w; }

Polynomial RotationClass::q_polynomial() const
{
    const auto w = Polynomial::variable(1, 0);
    switch (kind_) {
    case RotationKind::Elliptic: return w * w - 1.0;
    case RotationKind::Hyperbolic: return w * w + 1.0;
    case RotationKind::Parabolic: return w * w;
    }
    return Polynomial(1);
}

double RotationClass::invariant_coordinate(const MinkVec& x) const
{
    switch (kind_) {
    case RotationKind::Elliptic: return x.x3;
    case RotationKind::Hyperbolic: return x.x1;
    case RotationKind::Parabolic: return x.x2 - x.x3;
    }
    return 0.0;
}

MinkVec RotationClass::invariant_gradient() const
{
    switch (kind_) {
    case RotationKind::Elliptic: return {0.0, 0.0, -1.0};
    case RotationKind::Hyperbolic: return {1.0, 0.0, 0.0};
    case RotationKind::Parabolic: return {0.0, 1.0, 1.0};
    }
    return {};
}

Polynomial RotationClass::invariant_polynomial() const
{
    switch (kind_) {
    case RotationKind::Elliptic: return phase_coordinate(2);
    case RotationKind::Hyperbolic: return phase_coordinate(0);
    case RotationKind::Parabolic: return phase_coordinate(1) - phase_coordinate(2);
    }
    return Polynomial(kPhaseDim);
}

MinkVec RotationClass::fixed_direction() const
{
    switch (kind_) {
    case RotationKind::Elliptic: return kE3;
    case RotationKind::Hyperbolic: return kE1;
    case RotationKind::Parabolic: return {0.0, 1.0, 1.0};
    }
    return {};
}

Mat3 group_matrix(RotationClass cls, double p)
{
    switch (cls.kind()) {
    case RotationKind::Elliptic: {
        const double c = std::cos(p), s = std::sin(p);
        return {{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
    }
    case RotationKind::Hyperbolic: {
        const double c = std::cosh(p), s = std::sinh(p);
        return {{{1.0, 0.0, 0.0}, {0.0, c, s}, {0.0, s, c}}};
    }
    case RotationKind::Parabolic: {
        const double h = 0.5 * p * p;
        return {{{1.0, -p, p}, {p, 1.0 - h, h}, {p, -h, 1.0 + h}}};
    }
    }
    return {};
}

PhasePoint act(RotationClass cls, double param, const PhasePoint& z)
{
    const Mat3 r = group_matrix(cls, param);
    return {apply(r, z.x), apply(r, z.y)};
}

namespace {

MinkVec generator_on(RotationClass cls, const MinkVec& v)
{
    switch (cls.kind()) {
    case RotationKind::Elliptic: return -lorentz_cross(v, kE3);
    case RotationKind::Hyperbolic: return lorentz_cross(v, kE1);
    case RotationKind::Parabolic: return -lorentz_cross(v, kE2 + kE3);
    }
    return {};
}

}  // namespace

Vec6 infinitesimal_generator(RotationClass cls, const PhasePoint& z)
{
    const MinkVec dx = generator_on(cls, z.x), dy = generator_on(cls, z.y);
    return {dx.x1, dx.x2, dx.x3, dy.x1, dy.x2, dy.x3};
}

double momentum_map(RotationClass cls, const PhasePoint& z)
{
    const MinkVec& x = z.x;
    const MinkVec& y = z.y;
    switch (cls.kind()) {
    case RotationKind::Elliptic: return x.x1 * y.x2 - x.x2 * y.x1;
    case RotationKind::Hyperbolic: return x.x3 * y.x2 - x.x2 * y.x3;
    case RotationKind::Parabolic: return x.x1 * (y.x2 - y.x3) + y.x1 * (x.x3 - x.x2);
    }
    return 0.0;
}

Polynomial momentum_polynomial(RotationClass cls)
{
    const auto x1 = phase_coordinate(0), x2 = phase_coordinate(1), x3 = phase_coordinate(2);
    const auto y1 = phase_coordinate(3), y2 = phase_coordinate(4), y3 = phase_coordinate(5);
    switch (cls.kind()) {
    case RotationKind::Elliptic: return x1 * y2 - x2 * y1;
    case RotationKind::Hyperbolic: return x3 * y2 - x2 * y3;
    case RotationKind::Parabolic: return x1 * (y2 - y3) + y1 * (x3 - x2);
    }
    return Polynomial(kPhaseDim);
}

std::vector<PhasePoint> orbit_points(RotationClass cls, const PhasePoint& z, std::span<const double> params)
{
    std::vector<PhasePoint> out;
    out.reserve(params.size());
    for (double p : params) out.push_back(act(cls, p, z));
    return out;
}

ParabolicOrbitDecomposition parabolic_orbit_decomposition(const PhasePoint& z)
{
    const MinkVec& u = z.x;
    const MinkVec& v = z.y;
    return {z.coords(),
            {u.x3 - u.x2, u.x1, u.x1, v.x3 - v.x2, v.x1, v.x1},
            {0.0, u.x3 - u.x2, u.x3 - u.x2, 0.0, v.x3 - v.x2, v.x3 - v.x2}};
}

double normalizing_parameter(RotationClass cls, const PhasePoint& z)
{
    switch (cls.kind()) {
    case RotationKind::Elliptic: {
        // R(theta) rotates (a, b) by theta; bring it onto the positive x1 axis.
        double a = z.x.x1, b = z.x.x2;
        if (a == 0.0 && b == 0.0) {
            a = z.y.x1;
            b = z.y.x2;
        }
        if (a == 0.0 && b == 0.0) return 0.0;
        return -std::atan2(b, a);
    }
    case RotationKind::Hyperbolic: {
        // new x2 = cosh(s) x2 + sinh(s) x3 = 0; |x2| < x3 on H^2.
        if (!(z.x.x3 > std::abs(z.x.x2))) throw InvalidParameter("normalize_orbit: point is not on the upper sheet");
        return -std::atanh(z.x.x2 / z.x.x3);
    }
    case RotationKind::Parabolic: {
        // new x1 = x1 + t (x3 - x2) = 0; x3 - x2 > 0 on H^2.
        const double d = z.x.x3 - z.x.x2;
        if (!(d > 0.0)) throw InvalidParameter("normalize_orbit: point is not on the upper sheet");
        return -z.x.x1 / d;
    }
    }
    return 0.0;
}

PhasePoint normalize_orbit(RotationClass cls, const PhasePoint& z)
{
    PhasePoint n = act(cls, normalizing_parameter(cls, z), z);
    // Zero the coordinate the normalization pins, removing round-off.
    switch (cls.kind()) {
    case RotationKind::Elliptic:
        if (z.x.x1 != 0.0 || z.x.x2 != 0.0)
            n.x.x2 = 0.0;
        else
            n.y.x2 = 0.0;
        break;
    case RotationKind::Hyperbolic: n.x.x2 = 0.0; break;
    case RotationKind::Parabolic: n.x.x1 = 0.0; break;
    }
    return n;
}

}  // namespace hyperpend
