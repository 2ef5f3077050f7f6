#pragma once

#include <array>
#include <span>

#include "hyperpend/polynomial.hpp"

namespace hyperpend {

// A vector of R^{2,1}: three real coordinates paired by the Lorentz form
// <u,v>_L = u1 v1 + u2 v2 - u3 v3.
struct MinkVec {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    double operator[](std::size_t i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
    double& operator[](std::size_t i) { return i == 0 ? x1 : (i == 1 ? x2 : x3); }

    MinkVec& operator+=(const MinkVec& o)
    {
        x1 += o.x1;
        x2 += o.x2;
        x3 += o.x3;
        return *this;
    }
    MinkVec& operator-=(const MinkVec& o)
    {
        x1 -= o.x1;
        x2 -= o.x2;
        x3 -= o.x3;
        return *this;
    }
    MinkVec& operator*=(double s)
    {
        x1 *= s;
        x2 *= s;
        x3 *= s;
        return *this;
    }
    friend MinkVec operator+(MinkVec a, const MinkVec& b) { return a += b; }
    friend MinkVec operator-(MinkVec a, const MinkVec& b) { return a -= b; }
    friend MinkVec operator*(MinkVec a, double s) { return a *= s; }
    friend MinkVec operator*(double s, MinkVec a) { return a *= s; }
    friend MinkVec operator-(MinkVec a) { return a *= -1.0; }
    friend bool operator==(const MinkVec&, const MinkVec&) = default;
};

inline constexpr MinkVec kE1{1.0, 0.0, 0.0};
inline constexpr MinkVec kE2{0.0, 1.0, 0.0};
inline constexpr MinkVec kE3{0.0, 0.0, 1.0};

double lorentz_inner(const MinkVec& u, const MinkVec& v);

// (u2 v3 - u3 v2, u3 v1 - u1 v3, u2 v1 - u1 v2). The third component has the
// opposite sign of the Euclidean convention.
MinkVec lorentz_cross(const MinkVec& u, const MinkVec& v);

// (df/dx1, df/dx2, -df/dx3) for a polynomial f in three variables, so that
// <grad_L f(x), v>_L = Df(x) v.
MinkVec lorentz_gradient(const Polynomial& f, const MinkVec& x);

using Vec6 = std::array<double, 6>;

// A point (x, y) of T R^{2,1}: position x and velocity y.
struct PhasePoint {
    MinkVec x;
    MinkVec y;

    Vec6 coords() const { return {x.x1, x.x2, x.x3, y.x1, y.x2, y.x3}; }
    static PhasePoint from_coords(std::span<const double> z)
    {
        return {{z[0], z[1], z[2]}, {z[3], z[4], z[5]}};
    }
    friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

// Constraint functions cutting out V; both are Casimirs of the Dirac bracket.
inline double casimir_c1(const PhasePoint& z) { return lorentz_inner(z.x, z.x) + 1.0; }
inline double casimir_c2(const PhasePoint& z) { return lorentz_inner(z.x, z.y); }

Polynomial casimir_c1_polynomial();
Polynomial casimir_c2_polynomial();

bool on_V(const PhasePoint& z, double tol_constraint);
bool on_TH2(const PhasePoint& z, double tol_constraint);

// Lorentz gradients of a phase-space polynomial with respect to x and y.
struct SplitGradient {
    MinkVec dx;
    MinkVec dy;
};
SplitGradient lorentz_gradients(const Polynomial& f, const PhasePoint& z);

// Plain partial derivatives of a phase-space polynomial at z.
Vec6 partials(const Polynomial& f, const PhasePoint& z);

}  // namespace hyperpend
