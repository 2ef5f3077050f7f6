#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperpend/minkowski.hpp"
#include "hyperpend/polynomial.hpp"
#include "hyperpend/tolerances.hpp"

namespace hyperpend {

// Canonical bracket of omega_L on T R^{2,1}:
//   {f,g} = <grad_L^x f, grad_L^y g>_L - <grad_L^x g, grad_L^y f>_L.
double full_bracket(const Polynomial& f, const Polynomial& g, const PhasePoint& z);
double full_bracket(const SplitGradient& f, const SplitGradient& g);

// Dirac bracket for the constraints c1 = <x,x>_L + 1, c2 = <x,y>_L:
//   {f,g}* = {f,g} + sum_ij C_ij {f,c_i}{g,c_j},
//   C = 1/(2<x,x>_L) [[0,-1],[1,0]],
// with <x,x>_L taken at z itself. Throws DegeneratePointError when
// |<x,x>_L| < tol.degenerate.
double dirac_bracket(const Polynomial& f, const Polynomial& g, const PhasePoint& z, const Tolerances& tol = {});
double dirac_bracket(const SplitGradient& f, const SplitGradient& g, const PhasePoint& z, const Tolerances& tol = {});

// Structure functions gamma_ij of a bracket on n coordinates, stored as
// polynomials so antisymmetry can be checked term by term.
class BracketTable {
public:
    BracketTable(std::size_t n, std::size_t nvars);

    // Builds a table from all n*n entries without enforcing antisymmetry;
    // used for negative controls.
    static BracketTable from_entries(std::size_t n, std::vector<Polynomial> entries);

    std::size_t size() const { return n_; }
    std::size_t num_vars() const { return nvars_; }

    // Sets gamma_ij = p and gamma_ji = -p.
    void set(std::size_t i, std::size_t j, const Polynomial& p);
    const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    bool is_antisymmetric() const;

    double value(std::size_t i, std::size_t j, std::span<const double> z) const { return at(i, j)(z); }

    // sum_ij gamma_ij(z) df/dz_i dg/dz_j
    double bracket(const Polynomial& f, const Polynomial& g, std::span<const double> z) const;

    // Cyclic sum {z_i,{z_j,z_k}} + {z_j,{z_k,z_i}} + {z_k,{z_i,z_j}} at z.
    double jacobi(std::size_t i, std::size_t j, std::size_t k, std::span<const double> z) const;

    // Largest |jacobi(i,j,k)| over all coordinate triples.
    double max_jacobi(std::span<const double> z) const;

private:
    std::size_t n_;
    std::size_t nvars_;
    std::vector<Polynomial> entries_;
};

// The Dirac-Poisson structure restricted to V, as the explicit polynomial
// table in the coordinates (x1, x2, x3, y1, y2, y3).
BracketTable dirac_table();

// Hamiltonian vector field of h: component j is {z_j, h} = sum_i gamma_ji dh/dz_i.
std::vector<double> hamiltonian_field(const Polynomial& h, const BracketTable& table, std::span<const double> z);

// L_f(phi)(z) = D phi(z) f(z), with f given by its value at z.
double lie_derivative(std::span<const double> field_at_z, const Polynomial& phi, std::span<const double> z);

}  // namespace hyperpend
