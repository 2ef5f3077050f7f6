// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status if
// any criterion fails.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "hyperpend/analysis.hpp"
#include "hyperpend/brackets.hpp"
#include "hyperpend/certificates.hpp"
#include "hyperpend/dynamics.hpp"
#include "hyperpend/kernels.hpp"
#include "hyperpend/minkowski.hpp"
#include "hyperpend/potential.hpp"
#include "hyperpend/reduction.hpp"
#include "hyperpend/sampling.hpp"
#include "hyperpend/symmetry.hpp"
#include "test_helpers.hpp"

using namespace hyperpend;

namespace {

const RotationClass E = RotationKind::Elliptic, H = RotationKind::Hyperbolic, P = RotationKind::Parabolic;

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::vector<Polynomial> phase_coordinates()
{
    std::vector<Polynomial> c;
    for (std::size_t i = 0; i < kPhaseDim; ++i) c.push_back(phase_coordinate(i));
    return c;
}

// Constrained bracket matrix from a dense solve, independent of the table.
Eigen::Matrix<double, 6, 6> dirac_oracle(const PhasePoint& z)
{
    const Eigen::Vector3d eta(1.0, 1.0, -1.0);
    Eigen::Matrix<double, 6, 6> Pm = Eigen::Matrix<double, 6, 6>::Zero();
    for (int i = 0; i < 3; ++i) {
        Pm(i, 3 + i) = eta(i);
        Pm(3 + i, i) = -eta(i);
    }
    const Eigen::Vector3d x(z.x.x1, z.x.x2, z.x.x3), y(z.y.x1, z.y.x2, z.y.x3);
    Eigen::Matrix<double, 6, 2> D;
    D.col(0) << 2.0 * eta.cwiseProduct(x), Eigen::Vector3d::Zero();
    D.col(1) << eta.cwiseProduct(y), eta.cwiseProduct(x);
    const Eigen::Matrix2d C = D.transpose() * Pm * D;
    return Pm - Pm * D * C.inverse() * D.transpose() * Pm;
}

Outcome dirac_table_identity()
{
    const BracketTable table = dirac_table();
    const auto z = phase_coordinates();
    Sampler s(1001);
    double vs_bracket = 0.0, vs_oracle = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const PhasePoint p = k % 2 ? s.point_on_TH2() : s.point_on_V(true);
        const Vec6 c = p.coords();
        const auto oracle = dirac_oracle(p);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) {
                const double t = table.value(i, j, c);
                vs_bracket = std::max(vs_bracket, std::abs(dirac_bracket(z[i], z[j], p) - t));
                vs_oracle = std::max(vs_oracle, std::abs(oracle(int(i), int(j)) - t));
            }
    }
    return {table.is_antisymmetric() && vs_bracket <= 1e-9 && vs_oracle <= 1e-9,
            "1000 points, bracket vs table " + fmt(vs_bracket) + ", dense oracle vs table " + fmt(vs_oracle) + " (tol 1e-9)"};
}

Outcome casimir_property()
{
    const auto z = phase_coordinates();
    const Polynomial c1 = casimir_c1_polynomial(), c2 = casimir_c2_polynomial();
    Sampler s(1002);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const PhasePoint p = k % 2 ? s.point_on_TH2() : s.point_on_V(true);
        for (const auto& zj : z) worst = std::max({worst, std::abs(dirac_bracket(c1, zj, p)), std::abs(dirac_bracket(c2, zj, p))});
    }
    return {worst <= 1e-9, "2 constraints x 6 coordinates at 1000 points, max " + fmt(worst) + " (tol 1e-9)"};
}

Outcome jacobi_identities()
{
    const BracketTable dirac = dirac_table();
    Sampler s(1003);
    std::vector<PhasePoint> pts(500);
    for (auto& p : pts) p = s.point_on_TH2();
    const double full = kernels::max_over(pts.size(), [&](std::size_t i) { return dirac.max_jacobi(pts[i].coords()); });
    double reduced = 0.0;
    for (RotationClass cls : RotationClass::all()) {
        const BracketTable t = reduced_table(cls);
        std::vector<ReducedPoint> ws(500);
        for (auto& w : ws) w = s.image_point(cls);
        reduced = std::max(reduced, kernels::max_over(ws.size(), [&](std::size_t i) { return t.max_jacobi(ws[i].coords()); }));
    }
    return {full <= 1e-8 && reduced <= 1e-8, "500 points each, dirac " + fmt(full) + ", reduced " + fmt(reduced) + " (tol 1e-8)"};
}

Outcome conservation()
{
    Sampler s(1004);
    double drift_h = 0.0, drift_j = 0.0, casimir = 0.0;
    int failures = 0;
    for (RotationClass cls : RotationClass::all())
        for (const double c : {1.0, -1.0}) {
            std::vector<PhasePoint> init(10);
            for (auto& z : init) z = s.bounded_initial_condition(cls, c);
            for (const auto& r : kernels::integrate_ensemble(cls, Potential::linear(c), init, 1e-3, 10000)) {
                failures += r.failed;
                drift_h = std::max(drift_h, r.max_energy_drift);
                drift_j = std::max(drift_j, r.max_momentum_drift);
                casimir = std::max(casimir, r.max_casimir_residual);
            }
        }
    return {failures == 0 && drift_h <= 1e-7 && drift_j <= 1e-7 && casimir <= 1e-10,
            "60 trajectories T=10, H drift " + fmt(drift_h) + ", J drift " + fmt(drift_j) + " (tol 1e-7), casimirs " + fmt(casimir) +
                " (tol 1e-10), failures " + std::to_string(failures)};
}

double geodesic_error(double dt)
{
    const PhasePoint z0{{0, 0, 1}, {1, 0, 0}};
    const Trajectory tr = integrate(E, Potential::zero(), z0, dt, std::lround(5.0 / dt));
    double err = 0.0;
    for (std::size_t i = 0; i < tr.size(); ++i) {
        const double t = tr.t[i];
        err = std::max(err, testing::max_abs_diff(tr.z[i].x, {std::sinh(t), 0, std::cosh(t)}));
    }
    return err;
}

Outcome geodesic_oracle()
{
    const double err = geodesic_error(1e-3);
    const double ratio = geodesic_error(0.04) / geodesic_error(0.02);
    return {err <= 1e-6 && ratio >= 13.0 && ratio <= 19.0,
            "max error on [0,5] " + fmt(err) + " (tol 1e-6), error ratio when dt halves " + fmt(ratio) + " (expected ~16)"};
}

Outcome commutation()
{
    double worst = 0.0;
    int runs = 0;
    for (RotationClass cls : RotationClass::all())
        for (const bool linear : {true, false})
            for (int seed = 0; seed < 5; ++seed) {
                Sampler s(1100 + 10 * seed + (linear ? 1 : 0));
                const Potential u = linear ? Potential::linear(1.0) : quadratic_test_potential(cls);
                const PhasePoint z0 = linear ? s.bounded_initial_condition(cls, 1.0) : s.generic_initial_condition(cls);
                const Trajectory full = integrate(cls, u, z0, 1e-3, 5000);
                const ReducedTrajectory red = integrate_reduced(cls, u, hilbert_map(cls, z0), 1e-3, 5000);
                for (std::size_t i = 0; i < full.size(); ++i)
                    worst = std::max(worst, testing::max_abs_diff(hilbert_map(cls, full.z[i]), red.w[i]));
                ++runs;
            }
    return {worst <= 1e-6, std::to_string(runs) + " runs T=5, max deviation " + fmt(worst) + " (tol 1e-6)"};
}

Outcome bracket_pushforward()
{
    Tolerances tol;
    tol.identity = 1e-9;
    Sampler s(1005);
    std::vector<PhasePoint> pts(500);
    for (auto& p : pts) p = s.point_on_TH2();
    bool ok = true;
    std::ostringstream detail;
    for (RotationClass cls : RotationClass::all()) {
        const BracketTable t = reduced_table(cls);
        bool casimir = true;
        for (std::size_t i = 0; i < 4; ++i) casimir = casimir && t.at(i, 3).is_zero() && t.at(3, i).is_zero();
        const CertificateReport r = certify_reduced_bracket(hilbert_generators(cls), dirac_table(), t, pts, tol);
        ok = ok && r.passed && casimir;
        detail << cls.name() << " " << (r.passed ? "pass" : "fail") << " " << fmt(r.max_residual) << (casimir ? "" : " (w4 not central)") << "; ";
    }
    detail << "tol 1e-9";
    return {ok, detail.str()};
}

Outcome lift_round_trips()
{
    Sampler s(1006);
    double worst = 0.0;
    int boundary = 0;
    for (RotationClass cls : RotationClass::all())
        for (int k = 0; k < 1000; ++k) {
            const bool on_boundary = cls == E && k % 5 == 0;
            boundary += on_boundary;
            const ReducedPoint w = on_boundary ? s.elliptic_boundary_point() : s.image_point(cls);
            worst = std::max(worst, testing::max_abs_diff(hilbert_map(cls, lift(cls, w)), w));
        }
    return {worst <= 1e-12, "3000 points (" + std::to_string(boundary) + " on elliptic boundary strata), max " + fmt(worst) + " (tol 1e-12)"};
}

Outcome equilibrium_formulas()
{
    double worst = 0.0;
    int points = 0;
    for (RotationClass cls : RotationClass::all())
        for (const Potential& u : {Potential::linear(1.0), Potential::linear(-1.0), quadratic_test_potential(cls)}) {
            for (const auto& fam : relative_equilibria(cls, u).families) {
                const double lo = std::max(fam.rho_min, -10.0), hi = std::min(fam.rho_max, 10.0);
                if (lo > hi) continue;
                for (int k = 0; k <= 50; ++k) {
                    double rho = lo + (hi - lo) * k / 50.0;
                    if ((k == 0 && fam.min_open) || rho == 0.0) rho = lo + (hi - lo) * 1e-3;
                    if (k == 50 && fam.max_open) rho = hi - (hi - lo) * 1e-3;
                    const double w3 = cls.q(rho) * u.derivative(rho) / rho;
                    const double jsq = cls.q(rho) * w3;
                    if (!(jsq >= 0.0)) continue;
                    const auto f = reduced_field(cls, u, {rho, 0.0, w3, std::sqrt(jsq)});
                    const double scale = 1.0 + std::abs(rho * w3);
                    for (double v : f) worst = std::max(worst, std::abs(v) / scale);
                    ++points;
                }
            }
        }
    const bool parabolic_empty = relative_equilibria(P, Potential::linear(1.0)).points.empty();
    return {worst <= 1e-12 && points > 0 && parabolic_empty,
            std::to_string(points) + " grid points, max relative field " + fmt(worst) + " (tol 1e-12), parabolic c>0 " +
                (parabolic_empty ? "empty" : "NOT empty")};
}

Outcome hyperbolic_case3()
{
    const std::vector<double> crit = linear_critical_points(H, 1.0, 2.0);
    double dev = std::numeric_limits<double>::infinity();
    if (crit.size() == 2) dev = std::max(std::abs(crit[0] - 1.0 / 3.0), std::abs(crit[1] - 1.0));
    const ClassificationReport r = classify_linear(H, 1.0, {3.9, 2.0});
    const bool ordered = r.c1_minus && r.c1_plus && *r.c1_minus < *r.c1_plus;
    const Potential u = Potential::linear(1.0);
    const Stability center = stability(H, u, {1.0, 0.0, 2.0, 2.0});
    const Stability saddle = stability(H, u, {1.0 / 3.0, 0.0, 10.0 / 3.0, std::sqrt(100.0 / 27.0)});
    double center_re = 0.0, saddle_im = 0.0, center_im = 0.0, saddle_re = 0.0;
    for (const auto& l : center.eigenvalues) {
        center_re = std::max(center_re, std::abs(l.real()));
        center_im = std::max(center_im, std::abs(l.imag()));
    }
    for (const auto& l : saddle.eigenvalues) {
        saddle_im = std::max(saddle_im, std::abs(l.imag()));
        saddle_re = std::max(saddle_re, std::abs(l.real()));
    }
    const bool eig_ok = center.kind == StabilityKind::Center && saddle.kind == StabilityKind::Saddle && center_re <= 1e-6 &&
                        saddle_im <= 1e-6 && center_im > 1e-6 && saddle_re > 1e-6;
    std::ostringstream d;
    d << "critical points off by " << fmt(dev) << " (tol 1e-12), c1- " << (r.c1_minus ? fmt(*r.c1_minus) : "none") << " < c1+ "
      << (r.c1_plus ? fmt(*r.c1_plus) : "none") << ", center |Re| " << fmt(center_re) << ", saddle |Im| " << fmt(saddle_im);
    return {dev <= 1e-12 && ordered && eig_ok, d.str()};
}

Outcome parabolic_case_table()
{
    double worst = 0.0;
    for (const double e : {0.5, 1.0, 2.0}) {
        // Least squares fit of w2 = a w1 + b w1^2 to the upper branch near 0-.
        Eigen::MatrixXd A(40, 2);
        Eigen::VectorXd rhs(40);
        for (int k = 0; k < 40; ++k) {
            const double w1 = -1e-4 * (k + 1) / 40.0;
            A(k, 0) = w1;
            A(k, 1) = w1 * w1;
            rhs(k) = std::sqrt(std::max(level_radicand(P, Potential::linear(1.0), {0.0, e}, w1), 0.0));
        }
        const Eigen::Vector2d ab = A.colPivHouseholderQr().solve(rhs);
        // The upper branch w2 >= 0 with w1 < 0 has slope -sqrt(2e); the lower one +sqrt(2e).
        worst = std::max(worst, std::abs(std::abs(ab(0)) - std::sqrt(2.0 * e)));
    }
    bool empty = true;
    for (const double e : {0.0, -0.5, -2.0})
        for (const double jsq : {0.0, 0.1, 1.0}) empty = empty && classify_linear(P, -1.0, {jsq, e}).empty;
    return {worst <= 1e-6 && empty, "branch slope error " + fmt(worst) + " (tol 1e-6), c<0 energy<=0 levels " + (empty ? "empty" : "NOT empty")};
}

Outcome fiber_counts()
{
    Sampler s(1007);
    int checked = 0, mismatches = 0, two = 0;
    for (RotationClass cls : RotationClass::all())
        for (int k = 0; k < 200; ++k) {
            ReducedPoint w = s.image_point(cls);
            if (k % 4 == 0) {
                // Degenerate level jsq = 0.
                if (cls == E)
                    w = s.elliptic_boundary_point();
                else {
                    w.w4 = 0.0;
                    w.w3 = w.w2 * w.w2 / cls.q(w.w1);
                }
            }
            const FiberDescription f = fiber_description(cls, w);
            const PhasePoint a = normalize_orbit(cls, lift(cls, w));
            const PhasePoint b = normalize_orbit(cls, lift_other(cls, w));
            const bool differ = testing::max_abs_diff(a.coords(), b.coords()) > 1e-9;
            const bool says_two = f.kind == FiberKind::TwoOrbits;
            two += says_two;
            mismatches += differ != says_two;
            ++checked;
        }
    return {mismatches == 0, std::to_string(checked) + " points (" + std::to_string(two) + " two-orbit fibers), mismatches " + std::to_string(mismatches)};
}

Outcome elliptic_dichotomy()
{
    int outside = 0, not_escaped = 0;
    double margin = std::numeric_limits<double>::infinity();
    const Potential up = Potential::linear(1.0), un = Potential::linear(-1.0);
    for (int seed = 0; seed < 10; ++seed) {
        Sampler s(1200 + seed);
        const ReducedPoint w0 = hilbert_map(E, s.bounded_initial_condition(E, 1.0));
        const LevelSpec level{reduced_jsq(E, w0), reduced_energy(up, w0)};
        double lo = 1.0, hi = std::numeric_limits<double>::infinity();
        for (const auto& comp : classify_linear(E, 1.0, level).components)
            if (w0.w1 >= comp.w1_min - 1e-9 && w0.w1 <= comp.w1_max + 1e-9) {
                lo = comp.w1_min;
                hi = comp.w1_max;
            }
        const ReducedTrajectory t = integrate_reduced(E, up, w0, 1e-3, 10000);
        for (const auto& w : t.w) {
            const double slack = 1e-9 * (1.0 + hi);
            if (w.w1 < lo - slack || w.w1 > hi + slack) ++outside;
        }
        margin = std::min(margin, hi);
        if (!std::isfinite(hi)) ++outside;

        const ReducedPoint v0 = hilbert_map(E, s.bounded_initial_condition(E, -1.0));
        ReducedIntegrationOptions opts;
        opts.escape_radius = 1e3;
        const ReducedTrajectory esc = integrate_reduced(E, un, v0, 1e-3, 200000, opts);
        if (!esc.escaped || std::abs(esc.w.back().w1) < 1e3) ++not_escaped;
    }
    return {outside == 0 && not_escaped == 0,
            "c=+1: samples outside the w1 bound " + std::to_string(outside) + "; c=-1: trajectories not reaching |w1|=1e3 " +
                std::to_string(not_escaped)};
}

}  // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"dirac table identity", dirac_table_identity},
        {"casimir property", casimir_property},
        {"jacobi identities", jacobi_identities},
        {"energy and momentum conservation", conservation},
        {"geodesic oracle", geodesic_oracle},
        {"full and reduced flows commute", commutation},
        {"reduced bracket pushforward", bracket_pushforward},
        {"lift round trips", lift_round_trips},
        {"relative equilibrium formulas", equilibrium_formulas},
        {"hyperbolic center and saddle", hyperbolic_case3},
        {"parabolic case table", parabolic_case_table},
        {"fiber counts", fiber_counts},
        {"elliptic boundedness dichotomy", elliptic_dichotomy},
    };
    int failed = 0, index = 0;
    for (const auto& c : criteria) {
        ++index;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.passed;
        std::printf("%s %2d %s: %s\n", o.passed ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
