#pragma once

// Independent finite-difference check of the closed-form potentials: the
// azimuthal components satisfy the radial Poisson equation
//     f'' + f'/rho - f/rho^2 = rhs,
// with rhs = -Phi_m delta(rho - R) / (pi R^2) for A_phi and
//      rhs = +Phi_e delta(rho - R) / (pi R^2) for C_phi.
// The shell delta is smoothed to a Gaussian of width sigma, renormalised to
// unit radial integral on the grid, and the system is solved by a tridiagonal
// (Thomas) sweep with f(0) = 0 and f(rho_max) pinned to the exterior form.

#include <cmath>
#include <limits>
#include <vector>

#include "core.hpp"
#include "fields.hpp"

namespace dyonlab {

struct RadialGrid {
    double rho_max = 0.0;
    int n_points = 0;  // number of uniform intervals; samples sit at i*h, i = 0..n_points
    double sigma = 0.0;

    RadialGrid(const SolenoidConfig& s, double rho_max_, int n_points_, double sigma_)
        : rho_max(rho_max_), n_points(n_points_), sigma(sigma_) {
        if (!(rho_max >= 8.0 * s.radius))
            throw ParameterError("radial grid must extend to at least 8 R");
        if (n_points < 512) throw ParameterError("radial grid needs at least 512 points");
        if (!(sigma > 0.0) || !std::isfinite(sigma))
            throw ParameterError("shell smoothing width must be finite and positive");
        if (!(s.radius >= 8.0 * sigma) || !(rho_max - s.radius >= 8.0 * sigma))
            throw ParameterError("shell must sit at least 8 sigma from both boundaries");
    }

    double h() const { return rho_max / n_points; }
    double rho(int i) const { return i * h(); }

    static RadialGrid default_for(const SolenoidConfig& s) {
        return RadialGrid(s, 8.0 * s.radius, 4096, s.radius / 200.0);
    }
};

enum class RadialPotential { A, C };

struct RadialProfile {
    std::vector<double> rho;
    std::vector<double> value;
};

inline RadialProfile solve_radial_potential(const SolenoidConfig& s,
                                            const RadialGrid& grid,
                                            RadialPotential which) {
    const int n = grid.n_points;
    const double h = grid.h();
    const double flux = (which == RadialPotential::A) ? s.flux_m : s.flux_e;
    const double sign = (which == RadialPotential::A) ? -1.0 : 1.0;

    // Smoothed shell profile, renormalised so its trapezoid integral over the
    // grid is exactly 1; this keeps the total source strength h-independent.
    std::vector<double> delta(n + 1);
    double integral = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double u = grid.rho(i) - s.radius;
        delta[i] = std::exp(-0.5 * u * u / (grid.sigma * grid.sigma));
        integral += delta[i] * ((i == 0 || i == n) ? 0.5 : 1.0) * h;
    }
    for (double& d : delta) d /= integral;

    // Interior unknowns f_1..f_{n-1}; Dirichlet values at both ends.
    const double f_outer = sign * (-flux) / (two_pi * grid.rho_max);
    std::vector<double> lower(n - 1), diag(n - 1), upper(n - 1), rhs(n - 1);
    for (int i = 1; i < n; ++i) {
        const double rho = grid.rho(i);
        const int j = i - 1;
        lower[j] = 1.0 / (h * h) - 1.0 / (2.0 * h * rho);
        diag[j] = -2.0 / (h * h) - 1.0 / (rho * rho);
        upper[j] = 1.0 / (h * h) + 1.0 / (2.0 * h * rho);
        rhs[j] = sign * flux * delta[i] / (pi * s.radius * s.radius);
    }
    rhs[n - 2] -= upper[n - 2] * f_outer;

    // Thomas forward sweep; the operator is strictly diagonally dominant in
    // the -1/rho^2 shifted sense, but guard the pivots anyway.
    for (int j = 1; j < n - 1; ++j) {
        if (diag[j - 1] == 0.0) throw NumericError("singular tridiagonal pivot");
        const double w = lower[j] / diag[j - 1];
        diag[j] -= w * upper[j - 1];
        rhs[j] -= w * rhs[j - 1];
    }
    if (diag[n - 2] == 0.0) throw NumericError("singular tridiagonal pivot");

    RadialProfile out;
    out.rho.resize(n + 1);
    out.value.assign(n + 1, 0.0);
    std::vector<double> f(n - 1);
    f[n - 2] = rhs[n - 2] / diag[n - 2];
    for (int j = n - 3; j >= 0; --j) f[j] = (rhs[j] - upper[j] * f[j + 1]) / diag[j];
    for (int i = 0; i <= n; ++i) out.rho[i] = grid.rho(i);
    for (int i = 1; i < n; ++i) out.value[i] = f[i - 1];
    out.value[n] = f_outer;
    return out;
}

// Closed-form profile on the same grid, for comparison and CSV emission.
inline RadialProfile analytic_radial_potential(const SolenoidConfig& s,
                                               const RadialGrid& grid,
                                               RadialPotential which) {
    const double flux = (which == RadialPotential::A) ? s.flux_m : s.flux_e;
    const double sign = (which == RadialPotential::A) ? 1.0 : -1.0;
    RadialProfile out;
    out.rho.resize(grid.n_points + 1);
    out.value.resize(grid.n_points + 1);
    for (int i = 0; i <= grid.n_points; ++i) {
        const double rho = grid.rho(i);
        out.rho[i] = rho;
        out.value[i] = (rho < s.radius)
                           ? sign * flux * rho / (two_pi * s.radius * s.radius)
                           : sign * flux / (two_pi * rho);
    }
    return out;
}

// L-infinity deviation normalised by the largest analytic magnitude,
// excluding the smoothing band |rho - R| < 4 sigma where the regularised
// solution legitimately departs from the step-sourced closed form.
inline double oracle_report(const RadialProfile& analytic, const RadialProfile& numeric,
                            const SolenoidConfig& s, double sigma) {
    if (analytic.rho.size() != numeric.rho.size())
        throw ParameterError("oracle profiles must share one grid");
    double scale = 0.0;
    for (double v : analytic.value) scale = std::max(scale, std::abs(v));
    double worst = 0.0;
    for (std::size_t i = 0; i < analytic.rho.size(); ++i) {
        if (analytic.rho[i] != numeric.rho[i])
            throw ParameterError("oracle profiles must share one grid");
        if (std::abs(analytic.rho[i] - s.radius) < 4.0 * sigma) continue;
        worst = std::max(worst, std::abs(analytic.value[i] - numeric.value[i]));
    }
    if (scale == 0.0) return worst == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return worst / scale;
}

}  // namespace dyonlab
