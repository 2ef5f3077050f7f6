#include "hyperpend/roots.hpp"

#include <algorithm>
#include <cmath>

namespace hyperpend {

namespace {

double bisect(const std::function<double(double)>& f, double a, double b, double fa, double xtol)
{
    for (int it = 0; it < 200 && b - a > xtol; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi, int n, double xtol)
{
    std::vector<double> roots;
    if (!(hi > lo) || n < 1) return roots;
    const double h = (hi - lo) / n;
    double a = lo, fa = f(a);
    if (fa == 0.0) roots.push_back(a);
    for (int i = 1; i <= n; ++i) {
        const double b = (i == n) ? hi : lo + i * h;
        const double fb = f(b);
        if (fb == 0.0) {
            roots.push_back(b);
        } else if (fa != 0.0 && (fa < 0.0) != (fb < 0.0)) {
            roots.push_back(bisect(f, a, b, fa, xtol));
        }
        a = b;
        fa = fb;
    }
    return roots;
}

std::vector<double> scan_touching_roots(const std::function<double(double)>& f, const std::function<double(double)>& fprime,
                                        double lo, double hi, int n, double ftol, double xtol)
{
    std::vector<double> out;
    for (double r : scan_roots(fprime, lo, hi, n, xtol))
        if (std::abs(f(r)) <= ftol) out.push_back(r);
    return out;
}

std::vector<double> merge_roots(std::vector<double> a, const std::vector<double>& b, double merge)
{
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    std::vector<double> out;
    for (double r : a)
        if (out.empty() || r - out.back() > merge) out.push_back(r);
    return out;
}

}  // namespace hyperpend
