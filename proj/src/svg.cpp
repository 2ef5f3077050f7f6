#include "hyperpend/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "hyperpend/roots.hpp"

namespace hyperpend {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 60.0;

// Level colours follow the regime palette of the hyperbolic figures.
constexpr std::array<const char*, 5> kPalette{"#1f4fd8", "#7b2fbe", "#d62728", "#000000", "#2ca02c"};

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    if (s == "-0.00") s = "0.00";
    return s;
}

std::string fmt_label(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

// Equilibrium branch w -> jsq at the relative equilibrium z_w.
double equilibrium_jsq(RotationClass cls, const Potential& u, double w)
{
    if (w == 0.0) return std::nan("");
    const double q = cls.q(w);
    return q * q * u.derivative(w) / w;
}

}  // namespace

PlotWindow default_window(RotationClass cls)
{
    switch (cls.kind()) {
    case RotationKind::Elliptic: return {1.0, 5.0, 0.0};
    case RotationKind::Hyperbolic: return {-3.0, 3.0, 0.0};
    case RotationKind::Parabolic: return {-4.0, 0.0, 0.0};
    }
    return {};
}

std::vector<Polyline> level_polylines(RotationClass cls, const Potential& u, const LevelSpec& level, const PlotWindow& window,
                                      int samples, const Tolerances& tol)
{
    const LevelCurve curve = level_curve(cls, u, level, window.w1_min, window.w1_max, samples, tol);
    std::vector<Polyline> lines;
    auto radicand_ok = [&](double a, double b) {
        const double m = 0.5 * (a + b);
        return level_radicand(cls, u, level, m) >= 0.0;
    };
    // Upper and lower branches are traced separately; turning points (w2 = 0)
    // belong to both, so the two halves join into closed loops.
    for (double sign : {1.0, -1.0}) {
        Polyline current;
        double last_w1 = std::nan("");
        for (const auto& s : curve.samples) {
            if (sign * s.w.w2 < 0.0) continue;
            if (!current.empty() && !radicand_ok(last_w1, s.w.w1)) {
                if (current.size() > 1) lines.push_back(current);
                current.clear();
            }
            current.emplace_back(s.w.w1, s.w.w2);
            last_w1 = s.w.w1;
        }
        if (current.size() > 1) lines.push_back(current);
        else if (current.size() == 1) lines.push_back(current);  // isolated point
    }
    return lines;
}

std::vector<std::pair<double, double>> plotted_equilibria(const PlotSpec& spec, const Tolerances& tol)
{
    const RotationClass cls = spec.cls;
    const Potential& u = spec.potential;
    const RelativeEquilibria eq = relative_equilibria(cls, u, {}, tol);
    auto admissible = [&](double w) {
        for (const auto& f : eq.families)
            if (w >= f.rho_min && w <= f.rho_max) return true;
        return false;
    };
    // Only equilibria lying on a drawn level (same jsq and energy) are marked.
    auto same = [](double a, double b) { return std::abs(a - b) <= 1e-6 * (1.0 + std::abs(b)); };
    std::vector<std::pair<double, double>> pts;
    for (const auto& level : spec.levels) {
        const double jsq = level.jsq;
        if (cls.kind() == RotationKind::Elliptic && same(jsq, 0.0) && same(u.value(1.0), level.energy)) pts.emplace_back(1.0, 0.0);
        if (eq.sigma_ray && same(0.5 * jsq + u.value(0.0), level.energy)) pts.emplace_back(0.0, 0.0);
        const std::function<double(double)> g = [&](double w) { return equilibrium_jsq(cls, u, w) - jsq; };
        for (double r : scan_roots(g, spec.window.w1_min, spec.window.w1_max, 4 * spec.samples, 0.0)) {
            if (r == 0.0 || !admissible(r) || !same(equilibrium_jsq(cls, u, r), jsq)) continue;
            const double energy = 0.5 * cls.q(r) * u.derivative(r) / r + u.value(r);
            if (same(energy, level.energy)) pts.emplace_back(r, 0.0);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<double> default_energies(RotationClass cls, const Potential& u, double jsq, const Tolerances& tol)
{
    const RelativeEquilibria eq = relative_equilibria(cls, u, {}, tol);
    const PlotWindow win = default_window(cls);
    const std::function<double(double)> g = [&](double w) { return equilibrium_jsq(cls, u, w) - jsq; };
    for (double r : scan_roots(g, win.w1_min, win.w1_max, 4000, 0.0)) {
        bool admissible = false;
        for (const auto& f : eq.families) admissible = admissible || (r >= f.rho_min && r <= f.rho_max);
        if (r == 0.0 || !admissible || std::abs(g(r)) > 1e-6 * (1.0 + jsq)) continue;
        // Nested levels around the first equilibrium at this jsq.
        const double e0 = 0.5 * cls.q(r) * u.derivative(r) / r + u.value(r);
        std::vector<double> energies;
        for (double d : {0.0, 0.25, 0.5, 1.0, 2.0}) energies.push_back(e0 + d);
        return energies;
    }
    (void)tol;
    return {-2.0, -1.0, 0.0, 1.0, 2.0};
}

std::string render_svg(const PlotSpec& spec, const Tolerances& tol)
{
    PlotWindow win = spec.window;
    std::vector<std::vector<Polyline>> per_level;
    for (const auto& l : spec.levels) per_level.push_back(level_polylines(spec.cls, spec.potential, l, win, spec.samples, tol));
    const auto eqs = plotted_equilibria(spec, tol);

    if (win.w2_half <= 0.0) {
        double m = 0.0;
        for (const auto& lines : per_level)
            for (const auto& pl : lines)
                for (const auto& [a, b] : pl) m = std::max(m, std::abs(b));
        for (const auto& pl : spec.trajectories)
            for (const auto& [a, b] : pl)
                if (a >= win.w1_min && a <= win.w1_max) m = std::max(m, std::abs(b));
        win.w2_half = m > 0.0 ? 1.1 * m : 1.0;
    }
    const double x0 = kMargin, x1 = kWidth - kMargin, y0 = kMargin, y1 = kHeight - kMargin;
    auto px = [&](double w1) { return x0 + (w1 - win.w1_min) / (win.w1_max - win.w1_min) * (x1 - x0); };
    auto py = [&](double w2) {
        const double c = std::clamp(w2, -win.w2_half, win.w2_half);
        return y1 - (c + win.w2_half) / (2.0 * win.w2_half) * (y1 - y0);
    };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n";
    if (!spec.title.empty())
        os << "<text x=\"400\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" << escape(spec.title) << "</text>\n";

    // Axes box, zero line and ticks.
    os << "<g id=\"axes\" stroke=\"#444444\" stroke-width=\"1\" fill=\"none\">\n";
    os << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\"" << fmt(x1 - x0) << "\" height=\"" << fmt(y1 - y0) << "\"/>\n";
    os << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(py(0.0)) << "\" x2=\"" << fmt(x1) << "\" y2=\"" << fmt(py(0.0))
       << "\" stroke-dasharray=\"4 4\"/>\n";
    os << "</g>\n";
    os << "<g id=\"ticks\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#444444\">\n";
    for (int i = 0; i <= 4; ++i) {
        const double w1 = win.w1_min + (win.w1_max - win.w1_min) * i / 4.0;
        os << "<text x=\"" << fmt(px(w1)) << "\" y=\"" << fmt(y1 + 18) << "\" text-anchor=\"middle\">" << fmt_label(w1) << "</text>\n";
        const double w2 = -win.w2_half + 2.0 * win.w2_half * i / 4.0;
        os << "<text x=\"" << fmt(x0 - 6) << "\" y=\"" << fmt(py(w2) + 4) << "\" text-anchor=\"end\">" << fmt_label(w2) << "</text>\n";
    }
    os << "<text x=\"400\" y=\"" << fmt(kHeight - 15) << "\" text-anchor=\"middle\">w1</text>\n";
    os << "<text x=\"18\" y=\"300\" text-anchor=\"middle\">w2</text>\n";
    os << "</g>\n";

    auto path_of = [&](const Polyline& pl) {
        std::ostringstream d;
        for (std::size_t i = 0; i < pl.size(); ++i) d << (i == 0 ? "M" : " L") << fmt(px(pl[i].first)) << ',' << fmt(py(pl[i].second));
        return d.str();
    };

    os << "<g id=\"levels\" fill=\"none\" stroke-width=\"1.5\">\n";
    for (std::size_t k = 0; k < per_level.size(); ++k) {
        const char* colour = kPalette[k % kPalette.size()];
        os << "<g stroke=\"" << colour << "\" data-jsq=\"" << fmt_label(spec.levels[k].jsq) << "\" data-energy=\""
           << fmt_label(spec.levels[k].energy) << "\">\n";
        for (const auto& pl : per_level[k]) {
            if (pl.size() == 1)
                os << "<circle cx=\"" << fmt(px(pl[0].first)) << "\" cy=\"" << fmt(py(pl[0].second)) << "\" r=\"2\" fill=\"" << colour << "\"/>\n";
            else
                os << "<path d=\"" << path_of(pl) << "\"/>\n";
        }
        os << "</g>\n";
    }
    os << "</g>\n";

    os << "<g id=\"trajectories\" fill=\"none\" stroke=\"#1f4fd8\" stroke-width=\"1\">\n";
    for (const auto& pl : spec.trajectories) {
        Polyline clipped;
        for (const auto& p : pl)
            if (p.first >= win.w1_min && p.first <= win.w1_max) clipped.push_back(p);
        if (clipped.size() > 1) os << "<path d=\"" << path_of(clipped) << "\"/>\n";
    }
    os << "</g>\n";

    os << "<g id=\"equilibria\" fill=\"#e00000\">\n";
    for (const auto& [a, b] : eqs)
        if (a >= win.w1_min && a <= win.w1_max) os << "<circle cx=\"" << fmt(px(a)) << "\" cy=\"" << fmt(py(b)) << "\" r=\"4\"/>\n";
    os << "</g>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace hyperpend
