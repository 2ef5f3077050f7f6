#include "hyperpend/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

#include "hyperpend/errors.hpp"
#include "hyperpend/roots.hpp"

namespace hyperpend {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double q_second(RotationClass) { return 2.0; }

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)}); }

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

std::string stationary_fiber(RotationClass cls, double rho)
{
    switch (cls.kind()) {
    case RotationKind::Elliptic: return "circle x3 = " + fmt(rho) + " of stationary points";
    case RotationKind::Hyperbolic: return "hyperbola branch x1 = " + fmt(rho) + " of stationary points";
    case RotationKind::Parabolic: return "parabola x2 - x3 = " + fmt(rho) + " of stationary points";
    }
    return {};
}

std::string moving_fiber(RotationClass cls, double rho)
{
    switch (cls.kind()) {
    case RotationKind::Elliptic: return "two uniform circular motions on x3 = " + fmt(rho);
    case RotationKind::Hyperbolic: return "two motions along hyperbola branches x1 = " + fmt(rho);
    case RotationKind::Parabolic: return "two motions along parabolas x2 - x3 = " + fmt(rho);
    }
    return {};
}

}  // namespace

// ---- relative equilibria -------------------------------------------------

RelativeEquilibria relative_equilibria(RotationClass cls, const Potential& u, const EquilibriumScan& scan, const Tolerances& tol)
{
    RelativeEquilibria out;
    const double eps = tol.degenerate;

    auto make_point = [&](double rho, std::string kind) {
        ReducedEquilibrium e;
        e.rho = rho;
        e.kind = std::move(kind);
        const double du = u.derivative(rho);
        const double w3 = cls.q(rho) * du / rho;
        const double jsq = std::max(cls.q(rho) * w3, 0.0);
        e.w = {rho, 0.0, w3, std::sqrt(jsq)};
        e.fiber = jsq > tol.identity * (1.0 + std::abs(cls.q(rho) * w3)) ? moving_fiber(cls, rho) : stationary_fiber(cls, rho);
        return e;
    };

    if (cls.kind() == RotationKind::Elliptic) {
        ReducedEquilibrium z1;
        z1.rho = 1.0;
        z1.kind = "z1";
        z1.w = {1.0, 0.0, 0.0, 0.0};
        z1.fiber = "stationary point at the apex (0, 0, 1)";
        out.points.push_back(z1);
    }

    // Admissible sign condition on rho, as a function that is >= 0 exactly on admissible rho.
    auto condition = [&](double rho) {
        const double du = u.derivative(rho);
        return cls.kind() == RotationKind::Elliptic ? du : rho * du;
    };

    // Breakpoints: domain ends, 0 for the hyperbolic class, roots of U'.
    double lo = -scan.radius, hi = scan.radius;
    if (cls.kind() == RotationKind::Elliptic) lo = 1.0;
    if (cls.kind() == RotationKind::Parabolic) hi = 0.0;
    const std::function<double(double)> du = [&](double s) { return u.derivative(s); };
    const std::function<double(double)> ddu = [&](double s) { return u.second_derivative(s); };
    std::vector<double> roots = merge_roots(scan_roots(du, lo, hi, scan.cells, 0.0),
                                            scan_touching_roots(du, ddu, lo, hi, scan.cells, eps, 0.0), 1e-9);
    std::vector<double> nodes{lo};
    for (double r : roots)
        if (r > lo && r < hi) nodes.push_back(r);
    if (cls.kind() == RotationKind::Hyperbolic) nodes.push_back(0.0);
    nodes.push_back(hi);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    auto is_open_node = [&](double v) {
        if (cls.kind() == RotationKind::Elliptic && v == 1.0) return true;
        return v == 0.0 && cls.kind() != RotationKind::Elliptic;
    };
    auto is_root = [&](double v) { return std::find(roots.begin(), roots.end(), v) != roots.end(); };

    // Alternating sequence node0, gap0, node1, ..., nodeN; families are the
    // maximal runs of admissible items.
    const std::size_t last = nodes.size() - 1;
    std::vector<bool> gap_ok(last);
    for (std::size_t i = 0; i < last; ++i) gap_ok[i] = condition(0.5 * (nodes[i] + nodes[i + 1])) > 0.0;
    auto node_ok = [&](std::size_t i) -> bool {
        if (is_open_node(nodes[i])) return false;
        if (is_root(nodes[i])) return true;
        // Window ends stand in for the continuation of the adjacent gap.
        if (i == 0) return gap_ok[0];
        if (i == last) return gap_ok[last - 1];
        return false;
    };
    std::optional<EquilibriumFamily> run;
    for (std::size_t item = 0; item <= 2 * last; ++item) {
        const bool is_node = item % 2 == 0;
        const std::size_t i = item / 2;
        const bool ok = is_node ? node_ok(i) : gap_ok[i];
        if (ok) {
            if (!run) run = is_node ? EquilibriumFamily{nodes[i], nodes[i], false, false} : EquilibriumFamily{nodes[i], nodes[i + 1], true, true};
            run->rho_max = is_node ? nodes[i] : nodes[i + 1];
            run->max_open = !is_node;
        } else if (run) {
            out.families.push_back(*run);
            run.reset();
        }
    }
    if (run) out.families.push_back(*run);

    for (const auto& f : out.families) {
        if (f.isolated()) {
            out.points.push_back(make_point(f.rho_min, "z_rho"));
            continue;
        }
        const double a = std::max(f.rho_min, -scan.sample_radius), b = std::min(f.rho_max, scan.sample_radius);
        if (!(b > a)) continue;
        const int n = std::max(scan.samples_per_family, 1);
        for (int i = 0; i < n; ++i) {
            double t = n == 1 ? 0.5 : double(i) / double(n - 1);
            if (t == 0.0 && (f.min_open || a != f.rho_min)) t = 0.5 / n;
            if (t == 1.0 && (f.max_open || b != f.rho_max)) t = 1.0 - 0.5 / n;
            out.points.push_back(make_point(a + t * (b - a), "z_rho"));
        }
    }

    if (cls.kind() == RotationKind::Hyperbolic && std::abs(u.derivative(0.0)) <= eps) {
        out.sigma_ray = true;
        const int n = std::max(scan.samples_per_family, 2);
        for (int i = 0; i < n; ++i) {
            const double sigma = scan.sample_radius * double(i) / double(n - 1);
            ReducedEquilibrium e;
            e.rho = 0.0;
            e.kind = "z_sigma";
            e.w = {0.0, 0.0, sigma, std::sqrt(sigma)};
            e.fiber = sigma > 0.0 ? "two motions along the hyperbola branch x1 = 0" : stationary_fiber(cls, 0.0);
            out.points.push_back(e);
        }
    }
    return out;
}

// ---- linearization ---------------------------------------------------------

Matrix3 reduced_jacobian(RotationClass cls, const Potential& u, const ReducedPoint& w)
{
    const double du = u.derivative(w.w1), ddu = u.second_derivative(w.w1);
    const double q = cls.q(w.w1), dq = cls.q_prime(w.w1);
    return {{{0.0, 1.0, 0.0}, {w.w3 - dq * du - q * ddu, 0.0, w.w1}, {-2.0 * w.w2 * ddu, -2.0 * du, 0.0}}};
}

Stability stability(RotationClass cls, const Potential& u, const ReducedPoint& w, const Tolerances& tol)
{
    Stability s;
    const double du = u.derivative(w.w1), ddu = u.second_derivative(w.w1);
    s.restricted_k = w.w3 - 2.0 * cls.q_prime(w.w1) * du - cls.q(w.w1) * ddu;
    const double scale = 1.0 + std::abs(w.w3) + std::abs(cls.q_prime(w.w1) * du) + std::abs(cls.q(w.w1) * ddu);
    if (s.restricted_k < -tol.degenerate * scale)
        s.kind = StabilityKind::Center;
    else if (s.restricted_k > tol.degenerate * scale)
        s.kind = StabilityKind::Saddle;
    else
        s.kind = StabilityKind::Degenerate;

    const Matrix3 j = reduced_jacobian(cls, u, w);
    Eigen::Matrix3d m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m(r, c) = j[std::size_t(r)][std::size_t(c)];
    Eigen::EigenSolver<Eigen::Matrix3d> es(m, false);
    for (int i = 0; i < 3; ++i) s.eigenvalues[std::size_t(i)] = es.eigenvalues()(i);
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), [](const auto& a, const auto& b) {
        if (a.imag() != b.imag()) return a.imag() < b.imag();
        return a.real() < b.real();
    });
    return s;
}

std::string to_string(StabilityKind k)
{
    switch (k) {
    case StabilityKind::Center: return "center";
    case StabilityKind::Saddle: return "saddle";
    case StabilityKind::Degenerate: return "degenerate";
    }
    return "?";
}

// ---- level sets ---------------------------------------------------------------

double level_radicand(RotationClass cls, const Potential& u, const LevelSpec& level, double w1)
{
    return 2.0 * (level.energy - u.value(w1)) * cls.q(w1) - level.jsq;
}

namespace {

double radicand_prime(RotationClass cls, const Potential& u, const LevelSpec& level, double w)
{
    return 2.0 * (-u.derivative(w) * cls.q(w) + (level.energy - u.value(w)) * cls.q_prime(w));
}

double radicand_second(RotationClass cls, const Potential& u, const LevelSpec& level, double w)
{
    return 2.0 * (-u.second_derivative(w) * cls.q(w) - 2.0 * u.derivative(w) * cls.q_prime(w) +
                  (level.energy - u.value(w)) * q_second(cls));
}

void check_level(const LevelSpec& level)
{
    if (!(level.jsq >= 0.0)) throw InvalidParameter("level: jsq must be nonnegative");
    if (!std::isfinite(level.jsq) || !std::isfinite(level.energy)) throw InvalidParameter("level: values must be finite");
}

}  // namespace

LevelCurve level_curve(RotationClass cls, const Potential& u, const LevelSpec& level, double w1_min, double w1_max, int n,
                       const Tolerances& tol)
{
    if (n < 2) throw InvalidParameter("level_curve: need at least two samples");
    if (!(w1_max > w1_min)) throw InvalidParameter("level_curve: empty w1 range");
    check_level(level);

    LevelCurve curve;
    auto add = [&](double w1, bool endpoint) {
        const double f = level_radicand(cls, u, level, w1);
        if (f < 0.0 && !endpoint) return;
        const double w3 = 2.0 * (level.energy - u.value(w1));
        const double w2 = endpoint ? 0.0 : std::sqrt(f);
        ReducedPoint p{w1, w2, w3, std::sqrt(level.jsq)};
        if (!image_membership_3d(cls, p, tol)) return;
        curve.samples.push_back({p, endpoint || w2 == 0.0});
        if (w2 != 0.0) curve.samples.push_back({{w1, -w2, w3, p.w4}, false});
    };

    const std::function<double(double)> f = [&](double w) { return level_radicand(cls, u, level, w); };
    const std::function<double(double)> fp = [&](double w) { return radicand_prime(cls, u, level, w); };
    const double ftol = tol.case_boundary * (1.0 + level.jsq);
    const std::vector<double> ends =
        merge_roots(scan_roots(f, w1_min, w1_max, 4 * n, 0.0), scan_touching_roots(f, fp, w1_min, w1_max, 4 * n, ftol, 0.0), 0.0);
    for (double r : ends) add(r, true);
    for (int i = 0; i < n; ++i) {
        const double w1 = w1_min + (w1_max - w1_min) * double(i) / double(n - 1);
        if (std::find(ends.begin(), ends.end(), w1) != ends.end()) continue;
        add(w1, false);
    }
    std::stable_sort(curve.samples.begin(), curve.samples.end(), [](const LevelSample& a, const LevelSample& b) {
        if (a.w.w1 != b.w.w1) return a.w.w1 < b.w.w1;
        return a.w.w2 > b.w.w2;
    });
    return curve;
}

namespace {

enum class EndKind { Turn, Singular, Unbounded, Origin };

struct Event {
    double w;
    bool double_root;  // F' = 0 at the root
};

}  // namespace

std::vector<LevelComponent> level_components(RotationClass cls, const Potential& u, const LevelSpec& level,
                                             const LevelAnalysisOptions& opts, const Tolerances& tol)
{
    check_level(level);
    const double lo = cls.kind() == RotationKind::Elliptic ? 1.0 : -opts.radius;
    const double hi = cls.kind() == RotationKind::Parabolic ? 0.0 : opts.radius;

    const std::function<double(double)> f = [&](double w) { return level_radicand(cls, u, level, w); };
    const std::function<double(double)> fp = [&](double w) { return radicand_prime(cls, u, level, w); };
    const std::function<double(double)> fpp = [&](double w) { return radicand_second(cls, u, level, w); };
    auto ftol_at = [&](double w) {
        return tol.case_boundary * (1.0 + level.jsq + std::abs(2.0 * (level.energy - u.value(w)) * cls.q(w)));
    };
    auto fptol_at = [&](double w) {
        return tol.case_boundary * (1.0 + std::abs(2.0 * u.derivative(w) * cls.q(w)) +
                                    std::abs(2.0 * (level.energy - u.value(w)) * cls.q_prime(w)));
    };

    // Critical points of F split the window into monotone pieces.
    std::vector<double> crit = scan_roots(fp, lo, hi, opts.cells, 0.0);
    for (double r : scan_roots(fpp, lo, hi, opts.cells, 0.0))
        if (std::abs(fp(r)) <= fptol_at(r)) crit.push_back(r);
    crit = merge_roots(crit, {}, 1e-12);
    crit.erase(std::remove_if(crit.begin(), crit.end(), [&](double c) { return !(c > lo && c < hi); }), crit.end());

    std::vector<Event> events;
    std::vector<double> nodes{lo};
    nodes.insert(nodes.end(), crit.begin(), crit.end());
    nodes.push_back(hi);
    auto zero_at = [&](double w) { return std::abs(f(w)) <= ftol_at(w); };
    for (double c : crit)
        if (zero_at(c)) events.push_back({c, true});
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double a = nodes[i], b = nodes[i + 1];
        const bool a_zero = (i > 0 && zero_at(a)) || (i == 0 && cls.kind() == RotationKind::Elliptic && zero_at(a));
        const bool b_zero = (i + 2 < nodes.size() && zero_at(b));
        if (a_zero || b_zero) continue;
        const double fa = f(a), fb = f(b);
        if (fa != 0.0 && fb != 0.0 && (fa < 0.0) != (fb < 0.0)) {
            std::vector<double> r = scan_roots(f, a, b, 1, 0.0);
            if (!r.empty()) events.push_back({r.front(), false});
        } else if (fb == 0.0 && i + 2 < nodes.size()) {
            events.push_back({b, false});
        }
    }
    std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) { return x.w < y.w; });

    // Lower end of the elliptic window: w1 = 1 belongs to the image only on the apex ray.
    const bool apex_zero = cls.kind() == RotationKind::Elliptic && zero_at(lo);

    std::vector<double> bounds{lo};
    for (const auto& e : events) bounds.push_back(e.w);
    bounds.push_back(hi);
    std::vector<bool> positive(bounds.size() - 1);
    for (std::size_t g = 0; g + 1 < bounds.size(); ++g) positive[g] = bounds[g + 1] > bounds[g] && f(0.5 * (bounds[g] + bounds[g + 1])) > 0.0;

    std::vector<LevelComponent> comps;
    auto extent = [&](LevelComponent& comp, double a, double b) {
        const double fa = std::isfinite(a) ? a : std::max(lo, -std::max(10.0, std::abs(b) + 10.0));
        const double fb = std::isfinite(b) ? b : std::min(hi, std::max(10.0, std::abs(a) + 10.0));
        comp.w2_max = 0.0;
        comp.w3_min = kInf;
        comp.w3_max = -kInf;
        // Grid samples plus the interior critical points of the radicand and
        // of U, where the extremes of w2 and w3 are attained.
        std::vector<double> at;
        for (int k = 0; k <= 400; ++k) at.push_back(fa + (fb - fa) * k / 400.0);
        if (fb > fa) {
            for (double r : scan_roots(fp, fa, fb, 400, 0.0)) at.push_back(r);
            const std::function<double(double)> du = [&](double w) { return u.derivative(w); };
            for (double r : scan_roots(du, fa, fb, 400, 0.0)) at.push_back(r);
        }
        for (double w : at) {
            if (cls.kind() == RotationKind::Parabolic && w >= 0.0) continue;
            comp.w2_max = std::max(comp.w2_max, std::sqrt(std::max(f(w), 0.0)));
            const double w3 = 2.0 * (level.energy - u.value(w));
            comp.w3_min = std::min(comp.w3_min, w3);
            comp.w3_max = std::max(comp.w3_max, w3);
        }
    };

    // Isolated points: double roots with negative gaps on both sides.
    for (std::size_t k = 0; k < events.size(); ++k) {
        if (!events[k].double_root || positive[k] || positive[k + 1]) continue;
        LevelComponent c;
        c.shape = ComponentShape::Point;
        c.bounded = true;
        c.contains_equilibrium = true;
        c.trajectories = 1;
        c.w1_min = c.w1_max = events[k].w;
        c.w3_min = c.w3_max = 2.0 * (level.energy - u.value(events[k].w));
        c.stationary_w1 = {events[k].w};
        c.description = "single stationary point at w1 = " + fmt(events[k].w);
        comps.push_back(c);
    }
    if (apex_zero && !positive[0]) {
        // The apex itself when the level passes through (1, 0, 0); other w3 values lie off the image.
        const double w3 = 2.0 * (level.energy - u.value(1.0));
        if (std::abs(w3) <= ftol_at(1.0)) {
            LevelComponent c;
            c.shape = ComponentShape::Point;
            c.bounded = true;
            c.contains_equilibrium = true;
            c.w1_min = c.w1_max = 1.0;
            c.stationary_w1 = {1.0};
            c.description = "the apex stationary point (1, 0, 0)";
            comps.push_back(c);
        }
    }

    // Runs of positive gaps.
    std::size_t g = 0;
    while (g < positive.size()) {
        if (!positive[g]) {
            ++g;
            continue;
        }
        std::size_t h = g;
        std::vector<double> interior;
        while (h + 1 < positive.size() && positive[h + 1]) {
            interior.push_back(bounds[h + 1]);
            ++h;
        }
        // Ends of the run [bounds[g], bounds[h+1]].
        auto end_kind = [&](std::size_t bi, bool lower) {
            if (lower && bi == 0) {
                if (cls.kind() == RotationKind::Elliptic) return EndKind::Turn;  // only reachable through the apex ray
                return EndKind::Unbounded;
            }
            if (!lower && bi == bounds.size() - 1) return cls.kind() == RotationKind::Parabolic ? EndKind::Origin : EndKind::Unbounded;
            const Event& e = events[bi - 1];
            return e.double_root ? EndKind::Singular : EndKind::Turn;
        };
        const EndKind ea = end_kind(g, true), eb = end_kind(h + 1, false);
        const double a = ea == EndKind::Unbounded ? -kInf : bounds[g];
        const double b = eb == EndKind::Unbounded ? kInf : bounds[h + 1];

        LevelComponent c;
        c.w1_min = a;
        c.w1_max = b;
        c.bounded = ea != EndKind::Unbounded && eb != EndKind::Unbounded;
        extent(c, a, b);
        c.stationary_w1 = interior;
        if (ea == EndKind::Singular) c.stationary_w1.insert(c.stationary_w1.begin(), a);
        if (eb == EndKind::Singular) c.stationary_w1.push_back(b);
        c.contains_equilibrium = !c.stationary_w1.empty();

        const bool open_a = ea == EndKind::Unbounded || ea == EndKind::Origin;
        const bool open_b = eb == EndKind::Unbounded || eb == EndKind::Origin;
        if (c.stationary_w1.empty()) {
            if (ea == EndKind::Turn && eb == EndKind::Turn) {
                c.shape = ComponentShape::ClosedLoop;
                c.description = "closed loop, a periodic trajectory";
                comps.push_back(c);
            } else if (ea == EndKind::Turn && eb == EndKind::Origin) {
                c.shape = ComponentShape::LoopToOrigin;
                c.description = "loop approaching 0, a single trajectory";
                comps.push_back(c);
            } else if (open_a && open_b) {
                c.shape = ComponentShape::UnboundedBranch;
                c.bounded = false;
                const std::string where = eb == EndKind::Origin ? "branch approaching 0" : "unbounded branch";
                c.description = where + " with w2 > 0, a single trajectory";
                comps.push_back(c);
                c.description = where + " with w2 < 0, a single trajectory";
                comps.push_back(c);
            } else {
                c.shape = ComponentShape::UnboundedCurve;
                c.description = "unbounded connected curve, a single trajectory";
                comps.push_back(c);
            }
        } else {
            c.shape = ComponentShape::Singular;
            // Arcs between consecutive nodes of [a, stationary..., b].
            std::vector<std::pair<double, EndKind>> nodes_on{{a, ea}};
            for (double s : interior) nodes_on.push_back({s, EndKind::Singular});
            nodes_on.push_back({b, eb});
            int trajectories = int(c.stationary_w1.size());
            int homoclinic = 0, heteroclinic = 0, branches = 0;
            for (std::size_t k = 0; k + 1 < nodes_on.size(); ++k) {
                const EndKind l = nodes_on[k].second, r = nodes_on[k + 1].second;
                if (l == EndKind::Singular && r == EndKind::Singular) {
                    heteroclinic += 2;
                } else if (l == EndKind::Singular || r == EndKind::Singular) {
                    const EndKind other = l == EndKind::Singular ? r : l;
                    if (other == EndKind::Turn)
                        homoclinic += 1;
                    else
                        branches += 2;
                }
            }
            trajectories += homoclinic + heteroclinic + branches;
            c.trajectories = trajectories;
            std::ostringstream os;
            os << "degenerate curve: " << c.stationary_w1.size() << " stationary point(s) at w1 =";
            for (double s : c.stationary_w1) os << ' ' << fmt(s);
            if (branches) os << ", " << branches << (open_a || open_b ? (c.bounded ? " branches approaching them" : " unbounded branches approaching them") : " branches");
            if (homoclinic) os << ", " << homoclinic << " homoclinic loop(s)";
            if (heteroclinic) os << ", " << heteroclinic << " heteroclinic arc(s)";
            c.description = os.str();
            comps.push_back(c);
        }
        g = h + 1;
    }

    std::stable_sort(comps.begin(), comps.end(), [](const LevelComponent& x, const LevelComponent& y) { return x.w1_min < y.w1_min; });
    return comps;
}

std::string to_string(ComponentShape s)
{
    switch (s) {
    case ComponentShape::Point: return "point";
    case ComponentShape::ClosedLoop: return "closed-loop";
    case ComponentShape::UnboundedCurve: return "unbounded-curve";
    case ComponentShape::UnboundedBranch: return "unbounded-branch";
    case ComponentShape::LoopToOrigin: return "loop-to-origin";
    case ComponentShape::Singular: return "singular";
    }
    return "?";
}

// ---- smoothness ------------------------------------------------------------

SmoothnessVerdict level_set_smoothness(RotationClass cls, const Potential& u, const ReducedPoint& w, const Tolerances& tol)
{
    Eigen::Matrix<double, 2, 3> j;
    j << cls.q_prime(w.w1) * w.w3, -2.0 * w.w2, cls.q(w.w1), u.derivative(w.w1), 0.0, 0.5;
    Eigen::JacobiSVD<Eigen::Matrix<double, 2, 3>> svd(j);
    SmoothnessVerdict v;
    v.sigma_min = svd.singularValues()(1);
    v.critical = v.sigma_min < tol.rank;
    return v;
}

// ---- linear potentials ------------------------------------------------------

std::vector<double> linear_critical_points(RotationClass cls, double c, double e)
{
    std::vector<double> out;
    switch (cls.kind()) {
    case RotationKind::Elliptic: {
        // G = 2 (e - c w)(w^2 - 1), G' = 2 (-3 c w^2 + 2 e w + c); roots multiply to -1/3.
        const double disc = e * e + 3.0 * c * c;
        const double big = (e + std::copysign(std::sqrt(disc), e == 0.0 ? c : e)) / (3.0 * c);
        for (double w : {big, -1.0 / (3.0 * big)})
            if (w > 1.0) out.push_back(w);
        break;
    }
    case RotationKind::Hyperbolic: {
        // G = 2 (e - c w)(w^2 + 1), G' = 2 (-3 c w^2 + 2 e w - c); roots multiply to 1/3.
        const double disc = e * e - 3.0 * c * c;
        if (disc < 0.0) break;
        if (disc == 0.0) {
            out.push_back(e / (3.0 * c));
            break;
        }
        const double big = (e + std::copysign(std::sqrt(disc), e)) / (3.0 * c);
        out.push_back(big);
        out.push_back(1.0 / (3.0 * big));
        break;
    }
    case RotationKind::Parabolic: {
        // G = 2 w^2 (e - c w), G' = 2 w (2 e - 3 c w).
        const double w = 2.0 * e / (3.0 * c);
        if (w < 0.0) out.push_back(w);
        break;
    }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ClassificationReport classify_linear(RotationClass cls, double c, const LevelSpec& level, const Tolerances& tol)
{
    if (!(c != 0.0) || !std::isfinite(c)) throw InvalidParameter("classify_linear: c must be nonzero");
    check_level(level);

    const Potential u = Potential::linear(c);
    const double e = level.energy, jsq = level.jsq;
    const double tc = tol.case_boundary;
    auto G = [&](double w) { return 2.0 * (e - c * w) * cls.q(w); };

    ClassificationReport r;
    r.cls = cls;
    r.c = c;
    r.level = level;
    r.components = level_components(cls, u, level, {}, tol);
    r.empty = r.components.empty();
    r.critical_w1 = linear_critical_points(cls, c, e);

    for (double w : r.critical_w1) {
        ClassifiedEquilibrium q;
        q.jsq = G(w);
        if (q.jsq < -tc * (1.0 + std::abs(q.jsq))) continue;  // not in the image
        q.w = {w, 0.0, 2.0 * (e - c * w), std::sqrt(std::max(q.jsq, 0.0))};
        q.on_level = near(q.jsq, jsq, tc);
        q.stability = stability(cls, u, q.w, tol);
        r.equilibria.push_back(q);
    }

    const bool jsq_zero = jsq <= tc;
    switch (cls.kind()) {
    case RotationKind::Elliptic:
        if (c > 0.0) {
            r.case_label = "1";
            r.summary = "c > 0: equilibria z_rho for every rho >= 1; every trajectory of the reduced system is bounded";
        } else {
            r.case_label = "2";
            r.summary = "c < 0: the only equilibrium is z1; nonstationary trajectories are unbounded";
        }
        r.regime = jsq_zero ? "jsq=0" : "jsq>0";
        break;

    case RotationKind::Hyperbolic: {
        const double disc = e * e - 3.0 * c * c;
        if (std::abs(disc) <= tc * std::max({1.0, e * e, 3.0 * c * c})) {
            r.case_label = "2";
            const double w = e / (3.0 * c);
            r.critical_w1 = {w};
            r.degenerate_jsq = G(w);
            r.printed_degenerate_jsq = (e / c > 0.0 ? 1.0 : -1.0) * 16.0 * std::sqrt(3.0) * c / 9.0;
            if (near(jsq, *r.degenerate_jsq, tc)) {
                r.regime = "degenerate";
                r.summary = "degenerate curve: two branches approaching the cusp, each a trajectory";
            } else {
                r.regime = "generic";
                r.summary = "an unbounded connected component of an elliptic curve, equal to a trajectory";
            }
            // The cusp is a degenerate stationary point.
            r.equilibria.clear();
            if (*r.degenerate_jsq >= -tc) {
                ClassifiedEquilibrium q;
                q.jsq = *r.degenerate_jsq;
                q.w = {w, 0.0, 2.0 * (e - c * w), std::sqrt(std::max(q.jsq, 0.0))};
                q.on_level = r.regime == "degenerate";
                q.stability = stability(cls, u, q.w, tol);
                r.equilibria.push_back(q);
            }
        } else if (disc < 0.0) {
            r.case_label = "1";
            r.regime = "no-stationary-points";
            r.summary = "no stationary points; an unbounded connected component of an elliptic curve, equal to a trajectory";
        } else {
            r.case_label = "3";
            const double root = std::sqrt(disc);
            // w+ = (e + root)/(3c) is the center, w- = (e - root)/(3c) the saddle; w+ w- = 1/3.
            const double big = (e + std::copysign(root, e)) / (3.0 * c);
            const double small = 1.0 / (3.0 * big);
            const double w_plus = e > 0.0 ? big : small;
            const double w_minus = e > 0.0 ? small : big;
            r.critical_w1 = {w_plus, w_minus};
            r.c1_plus = G(w_plus);
            r.c1_minus = G(w_minus);
            if (!(*r.c1_minus < *r.c1_plus)) throw Error("classify_linear: saddle level is not below the center level");
            const double lo = *r.c1_minus, hi = *r.c1_plus;
            if (near(jsq, lo, tc)) {
                r.regime = "saddle-level";
                r.summary = "degenerate curve: two unbounded branches approaching the saddle and a homoclinic loop";
            } else if (near(jsq, hi, tc)) {
                r.regime = "center-level";
                r.summary = "degenerate curve: an unbounded branch and the center as a single point";
            } else if (jsq < lo) {
                r.regime = "below-saddle";
                r.summary = "an unbounded connected component of an elliptic curve, equal to a trajectory";
            } else if (jsq < hi) {
                r.regime = "between";
                r.summary = "a bounded closed loop and an unbounded component, each a trajectory";
            } else {
                r.regime = "above-center";
                r.summary = "an unbounded connected component of an elliptic curve, equal to a trajectory";
            }
            // Keep the center then the saddle, in the order the critical values are listed.
            std::vector<ClassifiedEquilibrium> eq;
            for (double w : {w_plus, w_minus}) {
                ClassifiedEquilibrium q;
                q.jsq = G(w);
                q.w = {w, 0.0, 2.0 * (e - c * w), std::sqrt(std::max(q.jsq, 0.0))};
                q.on_level = near(q.jsq, jsq, tc);
                q.stability = stability(cls, u, q.w, tol);
                eq.push_back(q);
            }
            r.equilibria = eq;
        }
        break;
    }

    case RotationKind::Parabolic: {
        const bool e_zero = std::abs(e) <= tc * std::max(1.0, std::abs(c));
        if (c > 0.0) {
            r.case_label = "1";
            if (!jsq_zero) {
                r.regime = "jsq>0";
                r.summary = "an unbounded connected component of an elliptic curve, equal to a trajectory";
            } else if (e_zero) {
                r.regime = "jsq=0,energy=0";
                r.summary = "degenerate curve: two branches approaching 0 with slope 0, each a trajectory";
            } else if (e < 0.0) {
                r.regime = "jsq=0,energy<0";
                r.summary = "an unbounded connected component of an elliptic curve, equal to a trajectory";
            } else {
                r.regime = "jsq=0,energy>0";
                r.summary = "degenerate curve: two branches approaching 0 with slopes +-sqrt(2 energy), each a trajectory";
            }
        } else {
            r.case_label = "2";
            if (e < 0.0 || e_zero) {
                r.regime = "energy<=0";
                r.summary = "the level set is empty";
            } else {
                r.jsq_max = G(2.0 * e / (3.0 * c));
                if (jsq_zero) {
                    r.regime = "loop-to-origin";
                    r.summary = "a loop of a degenerate curve, a trajectory approaching 0 with slopes +-sqrt(2 energy)";
                } else if (near(jsq, *r.jsq_max, tc)) {
                    r.regime = "single-point";
                    r.summary = "degenerate curve: a single stationary point";
                } else if (jsq < *r.jsq_max) {
                    r.regime = "bounded-component";
                    r.summary = "a bounded component of an elliptic curve, a closed trajectory";
                } else {
                    r.regime = "empty";
                    r.summary = "the level set is empty";
                }
            }
        }
        break;
    }
    }
    return r;
}

// ---- reconstruction -----------------------------------------------------------

std::string reconstruction_topology(RotationClass cls, const LevelSpec& level, const TrajectorySummary& summary,
                                    const Tolerances& tol)
{
    const bool jsq_zero = level.jsq <= tol.identity;
    switch (cls.kind()) {
    case RotationKind::Elliptic:
        if (jsq_zero) return "pinched cylinder (half-cone) through the apex and circles of stationary points";
        if (summary.stationary) return "two periodic orbits";
        return summary.bounded ? "torus" : "cylinder";
    case RotationKind::Hyperbolic:
        if (summary.stationary) return jsq_zero ? "hyperbola branch of stationary points" : "two hyperbola-branch trajectories";
        return summary.bounded ? "cylinder" : "plane";
    case RotationKind::Parabolic:
        if (summary.stationary) return jsq_zero ? "parabola of stationary points" : "two parabola trajectories";
        return "unbounded invariant set";
    }
    return "?";
}

}  // namespace hyperpend
