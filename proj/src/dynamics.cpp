#include "hyperpend/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "hyperpend/errors.hpp"
#include "hyperpend/reduction.hpp"
#include "hyperpend/roots.hpp"

namespace hyperpend {

namespace {

PhasePoint axpy(const PhasePoint& z, double a, const Vec6& v)
{
    return {{z.x.x1 + a * v[0], z.x.x2 + a * v[1], z.x.x3 + a * v[2]}, {z.y.x1 + a * v[3], z.y.x2 + a * v[4], z.y.x3 + a * v[5]}};
}

bool finite(const PhasePoint& z)
{
    for (double c : z.coords())
        if (!std::isfinite(c)) return false;
    return true;
}

// One RK4 step plus projection; `k` is the step index reported on failure.
PhasePoint step(RotationClass cls, const Potential& u, const PhasePoint& z, double dt, long k)
{
    const Vec6 k1 = vector_field(cls, u, z);
    const Vec6 k2 = vector_field(cls, u, axpy(z, 0.5 * dt, k1));
    const Vec6 k3 = vector_field(cls, u, axpy(z, 0.5 * dt, k2));
    const Vec6 k4 = vector_field(cls, u, axpy(z, dt, k3));
    Vec6 incr;
    for (std::size_t i = 0; i < 6; ++i) incr[i] = (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) / 6.0;
    const PhasePoint next = axpy(z, dt, incr);
    if (!finite(next)) throw StepFailure("integrate: state became non-finite", k);
    if (!(lorentz_inner(next.x, next.x) < 0.0) || !(next.x.x3 > 0.0))
        throw StepFailure("integrate: step left the upper sheet of the hyperboloid", k);
    return project_to_TH2(next);
}

void check_start(const PhasePoint& z0, double dt, long steps, const Tolerances& tol)
{
    if (!(dt > 0.0)) throw InvalidParameter("integrate: dt must be positive");
    if (steps < 0) throw InvalidParameter("integrate: steps must be nonnegative");
    if (!finite(z0) || !on_TH2(z0, tol.constraint)) throw InvalidParameter("integrate: initial point is not on T H^2");
}

}  // namespace

Vec6 vector_field(RotationClass cls, const Potential& u, const PhasePoint& z)
{
    const MinkVec g = u.derivative(cls.invariant_coordinate(z.x)) * cls.invariant_gradient();
    const MinkVec ydot = -g + (lorentz_inner(z.y, z.y) - lorentz_inner(z.x, g)) * z.x;
    return {z.y.x1, z.y.x2, z.y.x3, ydot.x1, ydot.x2, ydot.x3};
}

double energy(RotationClass cls, const Potential& u, const PhasePoint& z)
{
    return 0.5 * lorentz_inner(z.y, z.y) + u.value(cls.invariant_coordinate(z.x));
}

PhasePoint project_to_TH2(const PhasePoint& z)
{
    PhasePoint p = z;
    p.x *= 1.0 / std::sqrt(-lorentz_inner(z.x, z.x));
    p.y += lorentz_inner(p.x, p.y) * p.x;
    return p;
}

double Trajectory::max_energy_drift() const
{
    double m = 0.0;
    for (double h : energy) m = std::max(m, std::abs(h - energy.front()));
    return m;
}

double Trajectory::max_momentum_drift() const
{
    double m = 0.0;
    for (double j : momentum) m = std::max(m, std::abs(j - momentum.front()));
    return m;
}

double Trajectory::max_casimir_residual() const
{
    double m = 0.0;
    for (std::size_t k = 0; k < c1_residual.size(); ++k) m = std::max({m, std::abs(c1_residual[k]), std::abs(c2_residual[k])});
    return m;
}

Trajectory integrate(RotationClass cls, const Potential& u, const PhasePoint& z0, double dt, long steps, const Tolerances& tol)
{
    check_start(z0, dt, steps, tol);
    Trajectory tr;
    tr.t.reserve(std::size_t(steps) + 1);
    tr.z.reserve(std::size_t(steps) + 1);
    auto record = [&](double t, const PhasePoint& z) {
        tr.t.push_back(t);
        tr.z.push_back(z);
        tr.energy.push_back(energy(cls, u, z));
        tr.momentum.push_back(momentum_map(cls, z));
        tr.c1_residual.push_back(casimir_c1(z));
        tr.c2_residual.push_back(casimir_c2(z));
    };
    PhasePoint z = project_to_TH2(z0);
    record(0.0, z);
    for (long k = 1; k <= steps; ++k) {
        z = step(cls, u, z, dt, k);
        record(double(k) * dt, z);
    }
    return tr;
}

PhasePoint flow(RotationClass cls, const Potential& u, const PhasePoint& z0, double dt, long steps)
{
    check_start(z0, dt, steps, Tolerances{});
    PhasePoint z = project_to_TH2(z0);
    for (long k = 1; k <= steps; ++k) z = step(cls, u, z, dt, k);
    return z;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj)
{
    os << "t,x1,x2,x3,y1,y2,y3,H,J,c1res,c2res\n";
    const auto old = os.precision(17);
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const PhasePoint& z = traj.z[k];
        os << traj.t[k] << ',' << z.x.x1 << ',' << z.x.x2 << ',' << z.x.x3 << ',' << z.y.x1 << ',' << z.y.x2 << ',' << z.y.x3 << ','
           << traj.energy[k] << ',' << traj.momentum[k] << ',' << traj.c1_residual[k] << ',' << traj.c2_residual[k] << '\n';
    }
    os.precision(old);
}

FullEquilibria find_full_equilibria(RotationClass cls, const Potential& u, const EquilibriumSearch& search, const Tolerances& tol)
{
    FullEquilibria out;
    if (u.is_identically_zero()) {
        out.everywhere = true;
        return out;
    }

    // Range of the invariant coordinate on H^2.
    double lo = -search.radius, hi = search.radius;
    if (cls.kind() == RotationKind::Elliptic) lo = 1.0;
    if (cls.kind() == RotationKind::Parabolic) hi = 0.0;

    auto guarded = [](const std::function<double(double)>& f) {
        return [f](double s) {
            try {
                return f(s);
            } catch (const PoleError&) {
                return std::nan("");
            }
        };
    };
    const std::function<double(double)> du = guarded([&u](double s) { return u.derivative(s); });
    const std::function<double(double)> ddu = guarded([&u](double s) { return u.second_derivative(s); });
    std::vector<double> roots = scan_roots(du, lo, hi, search.cells);
    roots = merge_roots(roots, scan_touching_roots(du, ddu, lo, hi, search.cells, tol.degenerate), 1e-9);

    // The elliptic apex is stationary for every potential: grad_L x3 is normal to H^2 there.
    if (cls.kind() == RotationKind::Elliptic) roots = merge_roots(roots, {1.0}, 1e-9);

    for (double rho : roots) {
        if (cls.kind() == RotationKind::Parabolic && !(rho < 0.0)) continue;
        if (cls.kind() == RotationKind::Elliptic && rho < 1.0) continue;
        out.invariant_values.push_back(rho);
        const PhasePoint base = lift(cls, {rho, 0.0, 0.0, 0.0}, tol);
        if (cls.kind() == RotationKind::Elliptic && rho == 1.0) {
            out.points.push_back(base);
            continue;
        }
        std::vector<double> params(std::size_t(std::max(search.orbit_samples, 1)));
        const int n = int(params.size());
        for (int i = 0; i < n; ++i) {
            if (cls.kind() == RotationKind::Elliptic)
                params[std::size_t(i)] = 2.0 * std::numbers::pi * i / n;
            else
                params[std::size_t(i)] = n == 1 ? 0.0 : -search.orbit_extent + 2.0 * search.orbit_extent * i / (n - 1);
        }
        for (const auto& p : orbit_points(cls, base, params)) out.points.push_back(p);
    }
    return out;
}

}  // namespace hyperpend
