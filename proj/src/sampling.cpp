#include "hyperpend/sampling.hpp"

#include <cmath>
#include <numbers>

#include "hyperpend/analysis.hpp"
#include "hyperpend/dynamics.hpp"
#include "hyperpend/errors.hpp"

namespace hyperpend {

PhasePoint Sampler::point_on_TH2(double position_radius, double velocity_radius)
{
    PhasePoint z;
    z.x.x1 = uniform(-position_radius, position_radius);
    z.x.x2 = uniform(-position_radius, position_radius);
    z.x.x3 = std::sqrt(1.0 + z.x.x1 * z.x.x1 + z.x.x2 * z.x.x2);
    z.y.x1 = uniform(-velocity_radius, velocity_radius);
    z.y.x2 = uniform(-velocity_radius, velocity_radius);
    z.y.x3 = (z.x.x1 * z.y.x1 + z.x.x2 * z.y.x2) / z.x.x3;
    return z;
}

PhasePoint Sampler::point_on_V(bool lower_sheet, double position_radius, double velocity_radius)
{
    PhasePoint z = point_on_TH2(position_radius, velocity_radius);
    if (lower_sheet) {
        z.x.x3 = -z.x.x3;
        z.y.x3 = -z.y.x3;
    }
    return z;
}

double Sampler::group_parameter(RotationClass cls, double extent)
{
    if (cls.kind() == RotationKind::Elliptic) return uniform(0.0, 2.0 * std::numbers::pi);
    return uniform(-extent, extent);
}

ReducedPoint Sampler::image_point(RotationClass cls)
{
    double w1 = 0.0;
    switch (cls.kind()) {
    case RotationKind::Elliptic: w1 = uniform(1.05, 4.0); break;
    case RotationKind::Hyperbolic: w1 = uniform(-3.0, 3.0); break;
    case RotationKind::Parabolic: w1 = uniform(-4.0, -0.25); break;
    }
    const double w2 = uniform(-2.0, 2.0);
    const double jsq = uniform(0.0, 4.0);
    const double w3 = (jsq + w2 * w2) / cls.q(w1);
    return {w1, w2, w3, sign() * std::sqrt(jsq)};
}

ReducedPoint Sampler::elliptic_boundary_point()
{
    const double pick = uniform(0.0, 1.0);
    if (pick < 0.45) return {1.0, 0.0, uniform(0.0, 4.0), 0.0};
    if (pick < 0.9) return {uniform(1.0, 4.0), 0.0, 0.0, 0.0};
    return {1.0, 0.0, 0.0, 0.0};
}

ReducedPoint Sampler::image_point_3d(RotationClass cls)
{
    ReducedPoint w = image_point(cls);
    if (uniform(0.0, 1.0) < 0.25) w.w3 = w.w2 * w.w2 / cls.q(w.w1);
    w.w4 = 0.0;
    return w;
}

PhasePoint Sampler::bounded_initial_condition(RotationClass cls, double c)
{
    if (!(c != 0.0)) throw InvalidParameter("bounded_initial_condition: c must be nonzero");
    const Tolerances tol;
    PhasePoint z;
    switch (cls.kind()) {
    case RotationKind::Elliptic:
        if (c > 0.0) {
            z = point_on_TH2(2.0, 1.0);
        } else {
            // The apex is an unstable equilibrium for c < 0; stay close to it.
            z = point_on_TH2(1e-5, 1e-5);
        }
        break;
    case RotationKind::Hyperbolic: {
        // Along the bounded loops the reconstruction phase drifts along the
        // hyperbolic orbits, so |x| grows like cosh of the accumulated phase.
        // High energies keep that growth (and the rounding floor of the
        // constraints, ~|x|^2 eps) small over t = 10.
        const double e = uniform(12.0, 15.0);
        const ClassificationReport r = classify_linear(cls, c, {0.0, e});
        const double w_plus = r.critical_w1.at(0);
        const double lo = std::max(*r.c1_minus, 0.0), hi = *r.c1_plus;
        const double jsq = hi - uniform(0.05, 0.2) * (hi - lo);
        const double f = 2.0 * (e - c * w_plus) * cls.q(w_plus) - jsq;
        z = lift(cls, {w_plus, sign() * std::sqrt(f), 2.0 * (e - c * w_plus), sign() * std::sqrt(jsq)}, tol);
        break;
    }
    case RotationKind::Parabolic:
        if (c < 0.0) {
            const double e = uniform(0.5, 1.5);
            const double w_star = 2.0 * e / (3.0 * c);
            const double jsq_max = 2.0 * w_star * w_star * (e - c * w_star);
            const double jsq = uniform(0.2, 0.8) * jsq_max;
            const double f = jsq_max - jsq;
            z = lift(cls, {w_star, sign() * std::sqrt(f), 2.0 * (e - c * w_star), sign() * std::sqrt(jsq)}, tol);
        } else {
            // Towards w1 = 0 the motion slows down exponentially; the turning
            // point near |w1| ~ sqrt(jsq / 2e) is not reached before t = 10.
            const double e = uniform(0.01, 0.03) * c;
            const double w1 = -1.0;
            const double jsq = uniform(0.1, 1.0) * 1e-9;
            const double f = 2.0 * w1 * w1 * (e - c * w1) - jsq;
            z = lift(cls, {w1, std::sqrt(f), 2.0 * (e - c * w1), sign() * std::sqrt(jsq)}, tol);
        }
        break;
    }
    // A small group action only: boosts amplify |x| further.
    return project_to_TH2(act(cls, group_parameter(cls, 0.25), z));
}

PhasePoint Sampler::generic_initial_condition(RotationClass cls)
{
    for (;;) {
        const PhasePoint z = point_on_TH2(1.5, 1.0);
        if (cls.kind() != RotationKind::Parabolic) return z;
        if (reduced_jsq(cls, hilbert_map(cls, z)) >= 0.05) return z;
    }
}

Potential quadratic_test_potential(RotationClass cls)
{
    if (cls.kind() == RotationKind::Elliptic) return Potential({2.0, -2.0, 0.5});
    return Potential({0.0, 0.0, 0.5});
}

}  // namespace hyperpend
