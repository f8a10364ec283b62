#pragma once

// Closed-form electromagnetics of the dual solenoid: an infinite cylinder of
// radius R on the z axis carrying magnetic flux Phi_m and electric flux
// Phi_e.  Both fields are uniform inside the shell and vanish outside; the
// two vector potentials A (for B) and C (for -E) are azimuthal, continuous
// at the shell, and pure gauge outside.

#include <cmath>
#include <string>
#include <vector>

#include "core.hpp"
#include "numdiff.hpp"
#include "quadrature.hpp"

namespace dyonlab {

struct FieldSample {
    Position at;
    Vec3 E;
    Vec3 B;
    Vec3 A;
    Vec3 C;
};

// Step-function fields.  The shell itself (rho = R within 1e-12 relative) is
// rejected: the one-sided limits disagree and no principal value is defined.
inline FieldSample eval_fields(const SolenoidConfig& s, const Position& p) {
    if (s.on_shell(p))
        throw BoundaryError("field evaluation on the solenoid shell is ambiguous");
    FieldSample out;
    out.at = p;
    if (p.rho() < s.radius) {
        out.E = {0.0, 0.0, s.interior_E()};
        out.B = {0.0, 0.0, s.interior_B()};
    }
    return out;
}

// Azimuthal potentials, valid everywhere off the axis.  Interior branch grows
// linearly in rho, exterior branch falls as 1/rho; they agree at rho = R.
inline FieldSample eval_potentials(const SolenoidConfig& s, const Position& p) {
    const double rho = p.rho();
    if (rho == 0.0)
        throw AxisError("potentials are singular on the z axis");
    // phi_hat / rho = (-y, x, 0) / rho^2 stays finite and avoids the basis.
    const Vec3 phi_hat_over_rho{-p.y / (rho * rho), p.x / (rho * rho), 0.0};
    const double a_mag = (rho < s.radius)
                             ? s.flux_m * rho * rho / (two_pi * s.radius * s.radius)
                             : s.flux_m / two_pi;
    const double c_mag = (rho < s.radius)
                             ? -s.flux_e * rho * rho / (two_pi * s.radius * s.radius)
                             : -s.flux_e / two_pi;
    FieldSample out;
    out.at = p;
    out.A = phi_hat_over_rho * a_mag;
    out.C = phi_hat_over_rho * c_mag;
    return out;
}

// Surface currents regularised by a Gaussian shell of width sigma.  The
// electric current sources the magnetic flux, the magnetic current the
// electric flux (with opposite sign); both are azimuthal.
struct CurrentDensity {
    Vec3 electric;
    Vec3 magnetic;
};

inline CurrentDensity current_density(const SolenoidConfig& s, const Position& p,
                                      double shell_width,
                                      const PhysicalConstants& k = {}) {
    if (!(shell_width > 0.0) || !std::isfinite(shell_width))
        throw ParameterError("shell width must be finite and positive");
    const double rho = p.rho();
    const double u = rho - s.radius;
    // Truncated support keeps the axis (phi_hat undefined) unreachable for
    // any physically sensible width.
    if (std::abs(u) > 8.0 * shell_width) return {};
    if (rho == 0.0)
        throw AxisError("current density direction undefined on the z axis");
    const double delta =
        std::exp(-0.5 * u * u / (shell_width * shell_width)) /
        (shell_width * std::sqrt(two_pi));
    const double scale = k.c * delta / (4.0 * pi * pi * s.radius * s.radius);
    const Vec3 phi_hat = cylindrical_basis(p).phi_hat;
    return {phi_hat * (scale * s.flux_m), phi_hat * (-scale * s.flux_e)};
}

// Multivalued gauge functions of the unwrapped azimuth: their gradients
// reproduce the exterior potentials, and a full turn advances chi by Phi_m
// and xi by -Phi_e.
struct GaugeValues {
    double chi;
    double xi;
};

inline GaugeValues eval_gauge_functions(const SolenoidConfig& s, double phi_unwrapped) {
    if (!std::isfinite(phi_unwrapped))
        throw ParameterError("unwrapped azimuth must be finite");
    return {s.flux_m * phi_unwrapped / two_pi, -s.flux_e * phi_unwrapped / two_pi};
}

// Uniform interior magnetisation and polarisation equivalent to the confined
// fields: B = 4 pi M and E = -4 pi P inside, both zero outside.
struct MediumResponse {
    Vec3 magnetisation;
    Vec3 polarisation;
};

inline MediumResponse magnetisation_polarisation(const SolenoidConfig& s,
                                                 const Position& p) {
    if (s.on_shell(p))
        throw BoundaryError("medium response on the solenoid shell is ambiguous");
    MediumResponse out;
    if (p.rho() < s.radius) {
        const double scale = 1.0 / (4.0 * pi * pi * s.radius * s.radius);
        out.magnetisation = {0.0, 0.0, s.flux_m * scale};
        out.polarisation = {0.0, 0.0, -s.flux_e * scale};
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integral and differential consistency report.

struct Check {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct MaxwellReport {
    std::vector<Check> checks;
    double max_residual = 0.0;
    bool pass = true;

    void add(std::string name, double residual, double tolerance) {
        const bool ok = std::abs(residual) <= tolerance;
        checks.push_back({std::move(name), std::abs(residual), tolerance, ok});
        max_residual = std::max(max_residual, std::abs(residual));
        pass = pass && ok;
    }
};

// Checks Stokes' theorem on a coaxial loop (circulation of A against enclosed
// Phi_m, of C against -Phi_e) and the differential laws curl A = B,
// curl C = -E, div A = div C = 0 at fixed off-shell probe points, using
// central differences so no algebra is shared with the closed forms.
inline MaxwellReport verify_maxwell_integral(const SolenoidConfig& s, double loop_radius,
                                             double tol) {
    if (!(loop_radius > 0.0) || !std::isfinite(loop_radius))
        throw ParameterError("loop radius must be finite and positive");
    if (!(tol > 0.0))
        throw ParameterError("tolerance must be positive");

    MaxwellReport report;
    const double frac = std::min(1.0, loop_radius * loop_radius / (s.radius * s.radius));

    const auto potential_A = [&](const Position& p) { return eval_potentials(s, p).A; };
    const auto potential_C = [&](const Position& p) { return eval_potentials(s, p).C; };

    const auto circulation = [&](const auto& F) {
        return adaptive_simpson(
            [&](double phi) {
                const Position p = position_from_cylindrical(loop_radius, phi, 0.0);
                // dl = rho dphi phi_hat.
                return F(p).dot(cylindrical_basis(p).phi_hat) * loop_radius;
            },
            0.0, two_pi, tol / 16.0);
    };

    report.add("circulation_A_vs_enclosed_flux_m", circulation(potential_A) - s.flux_m * frac,
               tol);
    report.add("circulation_C_vs_enclosed_flux_e", circulation(potential_C) + s.flux_e * frac,
               tol);

    const double h = 1e-4 * s.radius;
    const Position probes[] = {
        position_from_cylindrical(0.45 * s.radius, 0.7, 0.1 * s.radius),
        position_from_cylindrical(0.20 * s.radius, -2.0, -0.3 * s.radius),
        position_from_cylindrical(1.60 * s.radius, 0.4, 0.0),
        position_from_cylindrical(3.10 * s.radius, 2.8, 0.5 * s.radius),
    };
    double curl_a = 0.0, curl_c = 0.0, div_a = 0.0, div_c = 0.0;
    for (const Position& p : probes) {
        const FieldSample f = eval_fields(s, p);
        curl_a = std::max(curl_a, (central_curl(potential_A, p, h) - f.B).norm());
        curl_c = std::max(curl_c, (central_curl(potential_C, p, h) + f.E).norm());
        div_a = std::max(div_a, std::abs(central_divergence(potential_A, p, h)));
        div_c = std::max(div_c, std::abs(central_divergence(potential_C, p, h)));
    }
    report.add("curl_A_minus_B", curl_a, tol);
    report.add("curl_C_plus_E", curl_c, tol);
    report.add("divergence_A", div_a, tol);
    report.add("divergence_C", div_c, tol);
    return report;
}

}  // namespace dyonlab
