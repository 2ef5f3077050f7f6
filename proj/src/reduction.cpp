#include "hyperpend/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "hyperpend/errors.hpp"

namespace hyperpend {

namespace {

// Magnitude used to turn absolute tolerances into relative ones for the
// variety relation and the inequality q(w1) w3 - w2^2 >= 0.
double relation_scale(RotationClass cls, const ReducedPoint& w)
{
    return 1.0 + std::abs(cls.q(w.w1) * w.w3) + w.w2 * w.w2 + w.w4 * w.w4;
}

bool on_variety(RotationClass cls, const ReducedPoint& w, const Tolerances& tol)
{
    return std::abs(variety_residual(cls, w)) <= tol.identity * relation_scale(cls, w);
}

bool jsq_nonnegative(RotationClass cls, const ReducedPoint& w, const Tolerances& tol)
{
    return reduced_jsq(cls, w) >= -tol.identity * relation_scale(cls, w);
}

MembershipVerdict yes(ImageStratum s) { return {true, s, {}}; }
MembershipVerdict no(std::string reason) { return {false, ImageStratum::NotMember, std::move(reason)}; }

bool all_finite(const ReducedPoint& w)
{
    return std::isfinite(w.w1) && std::isfinite(w.w2) && std::isfinite(w.w3) && std::isfinite(w.w4);
}

}  // namespace

double reduced_jsq(RotationClass cls, const ReducedPoint& w) { return cls.q(w.w1) * w.w3 - w.w2 * w.w2; }

double reduced_energy(const Potential& u, const ReducedPoint& w) { return 0.5 * w.w3 + u.value(w.w1); }

double variety_residual(RotationClass cls, const ReducedPoint& w) { return w.w4 * w.w4 - reduced_jsq(cls, w); }

ReducedPoint hilbert_map(RotationClass cls, const PhasePoint& z)
{
    const MinkVec& x = z.x;
    const MinkVec& y = z.y;
    const double w3 = lorentz_inner(y, y);
    const double w4 = momentum_map(cls, z);
    switch (cls.kind()) {
    case RotationKind::Elliptic: return {x.x3, y.x3, w3, w4};
    case RotationKind::Hyperbolic: return {x.x1, y.x1, w3, w4};
    case RotationKind::Parabolic: return {x.x2 - x.x3, y.x2 - y.x3, w3, w4};
    }
    return {};
}

std::vector<Polynomial> hilbert_polynomials(RotationClass cls)
{
    const auto y1 = phase_coordinate(3), y2 = phase_coordinate(4), y3 = phase_coordinate(5);
    const Polynomial w3 = y1 * y1 + y2 * y2 - y3 * y3;
    Polynomial w2(kPhaseDim);
    switch (cls.kind()) {
    case RotationKind::Elliptic: w2 = y3; break;
    case RotationKind::Hyperbolic: w2 = y1; break;
    case RotationKind::Parabolic: w2 = y2 - y3; break;
    }
    return {cls.invariant_polynomial(), w2, w3, momentum_polynomial(cls)};
}

GeneratorSet hilbert_generators(RotationClass cls, const Tolerances& tol)
{
    GeneratorSet g;
    g.generators = hilbert_polynomials(cls);
    const auto w1 = reduced_coordinate(0), w2 = reduced_coordinate(1), w3 = reduced_coordinate(2), w4 = reduced_coordinate(3);
    const Polynomial q = cls.q_polynomial().compose(std::vector<Polynomial>{w1});
    g.relations = {w4 * w4 - q * w3 + w2 * w2};
    g.image_predicate = [cls, tol](std::span<const double> w) {
        return image_membership(cls, ReducedPoint::from_coords(w), tol).member;
    };
    return g;
}

GeneratorSet invariant_generators(RotationClass cls)
{
    const auto x1 = phase_coordinate(0), x2 = phase_coordinate(1), x3 = phase_coordinate(2);
    const auto y1 = phase_coordinate(3), y2 = phase_coordinate(4), y3 = phase_coordinate(5);
    std::vector<Polynomial> s(6, Polynomial(6));
    for (std::size_t i = 0; i < 6; ++i) s[i] = Polynomial::variable(6, i);

    GeneratorSet g;
    const Polynomial speed = y1 * y1 + y2 * y2 - y3 * y3;
    switch (cls.kind()) {
    case RotationKind::Elliptic:
        g.generators = {x3, y3, speed, x1 * y1 + x2 * y2, x1 * x1 + x2 * x2, x1 * y2 - x2 * y1};
        g.relations = {s[3] * s[3] + s[5] * s[5] - s[4] * (s[2] + s[1] * s[1]), s[4] - s[0] * s[0] + 1.0, s[3] - s[0] * s[1]};
        break;
    case RotationKind::Hyperbolic:
        g.generators = {x1, y1, speed, x2 * y2 - x3 * y3, x2 * x2 - x3 * x3, x3 * y2 - x2 * y3};
        g.relations = {s[3] * s[3] - s[5] * s[5] - s[4] * (s[2] - s[1] * s[1]), s[4] + s[0] * s[0] + 1.0, s[3] + s[0] * s[1]};
        break;
    case RotationKind::Parabolic:
        g.generators = {x2 - x3,
                        y2 - y3,
                        speed,
                        x1 * y1 + 2.0 * x2 * y2 - x2 * y3 - x3 * y2,
                        x1 * x1 - 2.0 * x2 * x3 + 2.0 * x2 * x2,
                        x1 * (y2 - y3) + y1 * (x3 - x2)};
        g.relations = {s[0] * s[0] * s[1] * s[1] + s[0] * s[0] * s[2] - 2.0 * s[0] * s[1] * s[3] + s[1] * s[1] * s[4] - s[5] * s[5],
                       s[4] - s[0] * s[0] + 1.0,
                       s[3] - s[0] * s[1],
                       s[0] * s[0] * s[2] - s[1] * s[1] - s[5] * s[5]};
        break;
    }
    g.image_predicate = [](std::span<const double>) { return true; };
    return g;
}

BracketTable reduced_table(RotationClass cls)
{
    const auto w1 = reduced_coordinate(0), w2 = reduced_coordinate(1), w3 = reduced_coordinate(2);
    BracketTable t(kReducedDim, kReducedDim);
    t.set(0, 1, cls.q_polynomial().compose(std::vector<Polynomial>{w1}));
    t.set(1, 2, 2.0 * w1 * w3);
    t.set(2, 0, -2.0 * w2);
    return t;
}

Polynomial reduced_hamiltonian(const Potential& u) { return 0.5 * reduced_coordinate(2) + u.reduced_polynomial(); }

// ---- image ---------------------------------------------------------------

MembershipVerdict image_membership(RotationClass cls, const ReducedPoint& w, const Tolerances& tol)
{
    if (!all_finite(w)) return no("non-finite coordinates");
    if (!on_variety(cls, w, tol)) return no("off the variety w4^2 = q(w1) w3 - w2^2");

    switch (cls.kind()) {
    case RotationKind::Elliptic: {
        const double eps = tol.identity * (1.0 + std::abs(w.w1));
        const double r2 = w.w2 * w.w2 + w.w3;
        const double r2_eps = tol.identity * (1.0 + w.w2 * w.w2 + std::abs(w.w3));
        if (w.w1 > 1.0 + eps && r2 > r2_eps) return yes(ImageStratum::Interior);
        const bool w1_is_one = std::abs(w.w1 - 1.0) <= eps;
        const double small = tol.identity * relation_scale(cls, w);
        if (w1_is_one && std::abs(w.w2) <= small && std::abs(w.w4) <= small && w.w3 >= -small) return yes(ImageStratum::ApexRay);
        if (w.w1 >= 1.0 - eps && std::abs(w.w2) <= small && std::abs(w.w3) <= small && std::abs(w.w4) <= small)
            return yes(ImageStratum::AxisRay);
        if (w.w1 < 1.0 - eps) return no("w1 < 1");
        return no("w2^2 + w3 <= 0 away from the boundary rays");
    }
    case RotationKind::Hyperbolic:
        if (!jsq_nonnegative(cls, w, tol)) return no("q(w1) w3 - w2^2 < 0");
        return yes(ImageStratum::Interior);
    case RotationKind::Parabolic:
        if (!(w.w1 < 0.0)) return no("w1 >= 0");
        return yes(ImageStratum::Interior);
    }
    return no("unknown class");
}

MembershipVerdict image_membership_3d(RotationClass cls, const ReducedPoint& w, const Tolerances& tol)
{
    ReducedPoint p = w;
    p.w4 = 0.0;
    if (!all_finite(p)) return no("non-finite coordinates");
    if (!jsq_nonnegative(cls, p, tol)) return no("q(w1) w3 - w2^2 < 0");
    switch (cls.kind()) {
    case RotationKind::Elliptic: {
        const double eps = tol.identity * (1.0 + std::abs(p.w1));
        if (p.w1 < 1.0 - eps) return no("w1 < 1");
        if (p.w2 * p.w2 + p.w3 < -tol.identity * (1.0 + p.w2 * p.w2 + std::abs(p.w3))) return no("w2^2 + w3 < 0");
        const double small = tol.identity * relation_scale(cls, p);
        if (std::abs(p.w1 - 1.0) <= eps) return yes(ImageStratum::ApexRay);
        if (std::abs(p.w2) <= small && std::abs(p.w3) <= small) return yes(ImageStratum::AxisRay);
        return yes(ImageStratum::Interior);
    }
    case RotationKind::Hyperbolic: return yes(ImageStratum::Interior);
    case RotationKind::Parabolic:
        if (!(p.w1 < 0.0)) return no("w1 >= 0");
        return yes(ImageStratum::Interior);
    }
    return no("unknown class");
}

// ---- lifts ---------------------------------------------------------------

PhasePoint lift(RotationClass cls, const ReducedPoint& w, const Tolerances& tol)
{
    const MembershipVerdict v = image_membership(cls, w, tol);
    if (!v) throw MembershipError(std::string("lift: point is not in the image (") + v.reason + ")");

    switch (cls.kind()) {
    case RotationKind::Elliptic: {
        if (v.stratum == ImageStratum::AxisRay) {
            // A circle of stationary configurations; return its x2 = 0, x1 >= 0 point.
            const double w1 = std::max(w.w1, 1.0);
            return {{std::sqrt(w1 * w1 - 1.0), 0.0, w1}, {0.0, 0.0, 0.0}};
        }
        if (v.stratum == ImageStratum::ApexRay) return {{0.0, 0.0, 1.0}, {0.0, std::sqrt(std::max(w.w3, 0.0)), 0.0}};
        // x3 = w1, y = (0, r, w2) with r^2 = w2^2 + w3. Tangency <x,y> = 0 fixes
        // x2 = w1 w2 / r, and J = x1 r fixes x1.
        const double r = std::sqrt(w.w2 * w.w2 + w.w3);
        return {{w.w4 / r, w.w1 * w.w2 / r, w.w1}, {0.0, r, w.w2}};
    }
    case RotationKind::Hyperbolic: {
        const double a = std::sqrt(1.0 + w.w1 * w.w1);
        return {{w.w1, 0.0, a}, {w.w2, w.w4 / a, w.w1 * w.w2 / a}};
    }
    case RotationKind::Parabolic: {
        const double w1 = w.w1;
        const double y2 = (1.0 + w1 * w1) * w.w2 / (2.0 * w1 * w1);
        return {{0.0, (w1 * w1 - 1.0) / (2.0 * w1), -(w1 * w1 + 1.0) / (2.0 * w1)}, {-w.w4 / w1, y2, y2 - w.w2}};
    }
    }
    return {};
}

PhasePoint lift_other(RotationClass cls, const ReducedPoint& w, const Tolerances& tol)
{
    ReducedPoint m = w;
    m.w4 = -w.w4;
    return lift(cls, m, tol);
}

PhasePoint lift_3d(RotationClass cls, const ReducedPoint& w, const Tolerances& tol)
{
    const MembershipVerdict v = image_membership_3d(cls, w, tol);
    if (!v) throw MembershipError(std::string("lift: point is not in the image (") + v.reason + ")");
    ReducedPoint p = w;
    p.w4 = std::sqrt(std::max(reduced_jsq(cls, w), 0.0));
    // Snap boundary strata exactly onto their rays.
    if (cls.kind() == RotationKind::Elliptic) {
        if (v.stratum == ImageStratum::ApexRay) p = {1.0, 0.0, std::max(w.w3, 0.0), 0.0};
        if (v.stratum == ImageStratum::AxisRay) p = {w.w1, 0.0, 0.0, 0.0};
    }
    return lift(cls, p, tol);
}

FiberDescription fiber_description(RotationClass cls, const ReducedPoint& w, const Tolerances& tol)
{
    const MembershipVerdict v = image_membership_3d(cls, w, tol);
    if (!v) throw MembershipError(std::string("fiber_description: point is not in the image (") + v.reason + ")");

    FiberDescription f;
    switch (cls.kind()) {
    case RotationKind::Elliptic: f.geometry = OrbitGeometry::Ellipse; break;
    case RotationKind::Hyperbolic: f.geometry = OrbitGeometry::HyperbolaBranch; break;
    case RotationKind::Parabolic: f.geometry = OrbitGeometry::Parabola; break;
    }

    ReducedPoint p = w;
    p.w4 = 0.0;
    const double jsq = reduced_jsq(cls, p);
    const double eps = tol.identity * relation_scale(cls, p);
    if (cls.kind() == RotationKind::Elliptic && v.stratum == ImageStratum::ApexRay && std::abs(p.w3) <= eps) {
        f.kind = FiberKind::Point;
        f.geometry = OrbitGeometry::Point;
        f.orbit_count = 1;
    } else if (jsq > eps) {
        f.kind = FiberKind::TwoOrbits;
        f.orbit_count = 2;
    } else {
        f.kind = FiberKind::OneOrbit;
        f.orbit_count = 1;
    }
    f.label = f.kind == FiberKind::Point ? std::string("point") : std::to_string(f.orbit_count) + " x " + to_string(f.geometry);
    return f;
}

std::string to_string(ImageStratum s)
{
    switch (s) {
    case ImageStratum::Interior: return "interior";
    case ImageStratum::ApexRay: return "apex-ray";
    case ImageStratum::AxisRay: return "axis-ray";
    case ImageStratum::NotMember: return "not-member";
    }
    return "?";
}

std::string to_string(FiberKind k)
{
    switch (k) {
    case FiberKind::TwoOrbits: return "two-orbits";
    case FiberKind::OneOrbit: return "one-orbit";
    case FiberKind::Point: return "point";
    }
    return "?";
}

std::string to_string(OrbitGeometry g)
{
    switch (g) {
    case OrbitGeometry::Ellipse: return "ellipse";
    case OrbitGeometry::HyperbolaBranch: return "hyperbola-branch";
    case OrbitGeometry::Parabola: return "parabola";
    case OrbitGeometry::Point: return "point";
    }
    return "?";
}

// ---- reduced dynamics -----------------------------------------------------

std::array<double, 4> reduced_field(RotationClass cls, const Potential& u, const ReducedPoint& w)
{
    const double du = u.derivative(w.w1);
    return {w.w2, w.w1 * w.w3 - cls.q(w.w1) * du, -2.0 * w.w2 * du, 0.0};
}

double ReducedTrajectory::max_jsq_drift() const
{
    double m = 0.0;
    for (double j : jsq) m = std::max(m, std::abs(j - jsq.front()));
    return m;
}

double ReducedTrajectory::max_energy_drift() const
{
    double m = 0.0;
    for (double h : energy) m = std::max(m, std::abs(h - energy.front()));
    return m;
}

ReducedTrajectory integrate_reduced(RotationClass cls, const Potential& u, const ReducedPoint& w0, double dt, long steps,
                                    const ReducedIntegrationOptions& opts, const Tolerances& tol)
{
    if (!(dt > 0.0)) throw InvalidParameter("integrate_reduced: dt must be positive");
    if (steps < 0) throw InvalidParameter("integrate_reduced: steps must be nonnegative");
    if (opts.require_membership) {
        const MembershipVerdict v = image_membership_3d(cls, w0, tol);
        if (!v) throw MembershipError(std::string("integrate_reduced: initial point is not in the image (") + v.reason + ")");
    }

    ReducedTrajectory tr;
    auto record = [&](double t, const ReducedPoint& w) {
        tr.t.push_back(t);
        tr.w.push_back(w);
        tr.jsq.push_back(reduced_jsq(cls, w));
        tr.energy.push_back(reduced_energy(u, w));
    };
    record(0.0, w0);

    auto field = [&](const std::array<double, 4>& a) { return reduced_field(cls, u, ReducedPoint::from_coords(a)); };
    std::array<double, 4> w = w0.coords();
    for (long k = 1; k <= steps; ++k) {
        if (std::abs(w[0]) > opts.escape_radius) {
            tr.escaped = true;
            break;
        }
        std::array<double, 4> k1 = field(w), tmp{};
        for (int i = 0; i < 4; ++i) tmp[i] = w[i] + 0.5 * dt * k1[i];
        std::array<double, 4> k2 = field(tmp);
        for (int i = 0; i < 4; ++i) tmp[i] = w[i] + 0.5 * dt * k2[i];
        std::array<double, 4> k3 = field(tmp);
        for (int i = 0; i < 4; ++i) tmp[i] = w[i] + dt * k3[i];
        std::array<double, 4> k4 = field(tmp);
        for (int i = 0; i < 4; ++i) w[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        const ReducedPoint p = ReducedPoint::from_coords(w);
        if (!all_finite(p)) {
            if (std::isfinite(opts.escape_radius)) {
                tr.escaped = true;
                break;
            }
            throw StepFailure("integrate_reduced: state became non-finite", k);
        }
        record(double(k) * dt, p);
    }
    if (!tr.escaped && std::abs(tr.w.back().w1) > opts.escape_radius) tr.escaped = true;
    return tr;
}

void write_reduced_csv(std::ostream& os, const ReducedTrajectory& traj)
{
    os << "t,w1,w2,w3,w4,jsq,h\n";
    const auto old = os.precision(17);
    for (std::size_t k = 0; k < traj.t.size(); ++k) {
        const ReducedPoint& w = traj.w[k];
        os << traj.t[k] << ',' << w.w1 << ',' << w.w2 << ',' << w.w3 << ',' << w.w4 << ',' << traj.jsq[k] << ','
           << traj.energy[k] << '\n';
    }
    os.precision(old);
}

}  // namespace hyperpend
