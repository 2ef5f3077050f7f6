#include "hyperpend/brackets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyperpend/errors.hpp"

namespace hyperpend {

double full_bracket(const SplitGradient& f, const SplitGradient& g)
{
    return lorentz_inner(f.dx, g.dy) - lorentz_inner(g.dx, f.dy);
}

double full_bracket(const Polynomial& f, const Polynomial& g, const PhasePoint& z)
{
    return full_bracket(lorentz_gradients(f, z), lorentz_gradients(g, z));
}

double dirac_bracket(const SplitGradient& f, const SplitGradient& g, const PhasePoint& z, const Tolerances& tol)
{
    const double xx = lorentz_inner(z.x, z.x);
    if (std::abs(xx) < tol.degenerate) throw DegeneratePointError("dirac_bracket: <x,x>_L vanishes, correction matrix is singular");

    // grad c1 = (2x, 0), grad c2 = (y, x) in Lorentz form.
    const SplitGradient c1{2.0 * z.x, MinkVec{}};
    const SplitGradient c2{z.y, z.x};

    const double f_c1 = full_bracket(f, c1), f_c2 = full_bracket(f, c2);
    const double g_c1 = full_bracket(g, c1), g_c2 = full_bracket(g, c2);

    // C = 1/(2<x,x>) [[0,-1],[1,0]]
    const double k = 1.0 / (2.0 * xx);
    return full_bracket(f, g) + k * (-f_c1 * g_c2 + f_c2 * g_c1);
}

double dirac_bracket(const Polynomial& f, const Polynomial& g, const PhasePoint& z, const Tolerances& tol)
{
    return dirac_bracket(lorentz_gradients(f, z), lorentz_gradients(g, z), z, tol);
}

BracketTable::BracketTable(std::size_t n, std::size_t nvars)
    : n_(n), nvars_(nvars), entries_(n * n, Polynomial(nvars))
{
}

BracketTable BracketTable::from_entries(std::size_t n, std::vector<Polynomial> entries)
{
    if (entries.size() != n * n) throw std::invalid_argument("BracketTable: expected n*n entries");
    const std::size_t nvars = n ? entries[0].num_vars() : 0;
    for (const auto& e : entries)
        if (e.num_vars() != nvars) throw std::invalid_argument("BracketTable: entries disagree on variable count");
    BracketTable t(n, nvars);
    t.entries_ = std::move(entries);
    return t;
}

void BracketTable::set(std::size_t i, std::size_t j, const Polynomial& p)
{
    if (i >= n_ || j >= n_) throw std::out_of_range("BracketTable::set: index out of range");
    if (p.num_vars() != nvars_) throw std::invalid_argument("BracketTable::set: wrong variable count");
    if (i == j && !p.is_zero()) throw std::invalid_argument("BracketTable::set: diagonal must vanish");
    entries_[i * n_ + j] = p;
    entries_[j * n_ + i] = -p;
}

bool BracketTable::is_antisymmetric() const
{
    for (std::size_t i = 0; i < n_; ++i) {
        if (!at(i, i).is_zero()) return false;
        for (std::size_t j = i + 1; j < n_; ++j)
            if (!(at(i, j) + at(j, i)).is_zero()) return false;
    }
    return true;
}

double BracketTable::bracket(const Polynomial& f, const Polynomial& g, std::span<const double> z) const
{
    if (f.num_vars() != n_ || g.num_vars() != n_) throw std::invalid_argument("BracketTable::bracket: arguments must be functions of the table coordinates");
    std::vector<double> df(n_), dg(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        df[i] = f.derivative(i)(z);
        dg[i] = g.derivative(i)(z);
    }
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (df[i] == 0.0) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (dg[j] != 0.0) s += value(i, j, z) * df[i] * dg[j];
    }
    return s;
}

double BracketTable::jacobi(std::size_t i, std::size_t j, std::size_t k, std::span<const double> z) const
{
    // {z_a, gamma_bc} = sum_l gamma_al d gamma_bc / dz_l
    auto outer = [&](std::size_t a, std::size_t b, std::size_t c) {
        double s = 0.0;
        const Polynomial& inner = at(b, c);
        for (std::size_t l = 0; l < n_; ++l) {
            const double g = value(a, l, z);
            if (g != 0.0) s += g * inner.derivative(l)(z);
        }
        return s;
    };
    return outer(i, j, k) + outer(j, k, i) + outer(k, i, j);
}

double BracketTable::max_jacobi(std::span<const double> z) const
{
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            for (std::size_t k = j + 1; k < n_; ++k) m = std::max(m, std::abs(jacobi(i, j, k, z)));
    return m;
}

BracketTable dirac_table()
{
    const auto x1 = phase_coordinate(0), x2 = phase_coordinate(1), x3 = phase_coordinate(2);
    const auto y1 = phase_coordinate(3), y2 = phase_coordinate(4), y3 = phase_coordinate(5);

    BracketTable t(kPhaseDim, kPhaseDim);
    t.set(0, 3, x1 * x1 + 1.0);
    t.set(0, 4, x1 * x2);
    t.set(0, 5, x1 * x3);
    t.set(1, 3, x1 * x2);
    t.set(1, 4, x2 * x2 + 1.0);
    t.set(1, 5, x2 * x3);
    t.set(2, 3, x1 * x3);
    t.set(2, 4, x2 * x3);
    t.set(2, 5, x3 * x3 - 1.0);
    t.set(3, 4, x1 * y2 - x2 * y1);
    t.set(3, 5, x1 * y3 - y1 * x3);
    t.set(4, 5, x2 * y3 - y2 * x3);
    return t;
}

std::vector<double> hamiltonian_field(const Polynomial& h, const BracketTable& table, std::span<const double> z)
{
    const std::size_t n = table.size();
    if (h.num_vars() != n) throw std::invalid_argument("hamiltonian_field: h must be a function of the table coordinates");
    std::vector<double> dh(n);
    for (std::size_t i = 0; i < n; ++i) dh[i] = h.derivative(i)(z);
    std::vector<double> out(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (dh[i] != 0.0) out[j] += table.value(j, i, z) * dh[i];
    return out;
}

double lie_derivative(std::span<const double> field_at_z, const Polynomial& phi, std::span<const double> z)
{
    const std::size_t n = phi.num_vars();
    if (field_at_z.size() != n) throw std::invalid_argument("lie_derivative: field dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (field_at_z[i] != 0.0) s += phi.derivative(i)(z) * field_at_z[i];
    return s;
}

}  // namespace hyperpend
