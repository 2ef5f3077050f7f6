#include "hyperpend/minkowski.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperpend {

double lorentz_inner(const MinkVec& u, const MinkVec& v) { return u.x1 * v.x1 + u.x2 * v.x2 - u.x3 * v.x3; }

MinkVec lorentz_cross(const MinkVec& u, const MinkVec& v)
{
    return {u.x2 * v.x3 - u.x3 * v.x2, u.x3 * v.x1 - u.x1 * v.x3, u.x2 * v.x1 - u.x1 * v.x2};
}

MinkVec lorentz_gradient(const Polynomial& f, const MinkVec& x)
{
    if (f.num_vars() != 3) throw std::invalid_argument("lorentz_gradient: expected a polynomial in three variables");
    const double p[3] = {x.x1, x.x2, x.x3};
    return {f.derivative(0)(p), f.derivative(1)(p), -f.derivative(2)(p)};
}

Polynomial casimir_c1_polynomial()
{
    const auto x1 = phase_coordinate(0), x2 = phase_coordinate(1), x3 = phase_coordinate(2);
    return x1 * x1 + x2 * x2 - x3 * x3 + 1.0;
}

Polynomial casimir_c2_polynomial()
{
    const auto x1 = phase_coordinate(0), x2 = phase_coordinate(1), x3 = phase_coordinate(2);
    const auto y1 = phase_coordinate(3), y2 = phase_coordinate(4), y3 = phase_coordinate(5);
    return x1 * y1 + x2 * y2 - x3 * y3;
}

bool on_V(const PhasePoint& z, double tol_constraint)
{
    return std::abs(casimir_c1(z)) <= tol_constraint && std::abs(casimir_c2(z)) <= tol_constraint;
}

bool on_TH2(const PhasePoint& z, double tol_constraint) { return on_V(z, tol_constraint) && z.x.x3 > 0.0; }

Vec6 partials(const Polynomial& f, const PhasePoint& z)
{
    if (f.num_vars() != kPhaseDim) throw std::invalid_argument("partials: expected a phase-space polynomial");
    const Vec6 c = z.coords();
    Vec6 d{};
    for (std::size_t i = 0; i < kPhaseDim; ++i) d[i] = f.derivative(i)(c);
    return d;
}

SplitGradient lorentz_gradients(const Polynomial& f, const PhasePoint& z)
{
    const Vec6 d = partials(f, z);
    return {{d[0], d[1], -d[2]}, {d[3], d[4], -d[5]}};
}

}  // namespace hyperpend
