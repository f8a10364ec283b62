#pragma once

// Accumulation of the duality-invariant quantum phase
//     delta = (1/hbar c) * Int (q A + g C) . dl
// along sampled paths outside the solenoid, with gauge-shift machinery and
// the equivalent interior-field ("nonlocality") form.

#include <array>
#include <cmath>
#include <string>

#include "core.hpp"
#include "fields.hpp"
#include "path.hpp"
#include "quadrature.hpp"

namespace dyonlab {

struct PhaseResult {
    double phase = 0.0;
    int winding = 0;
    double circulation_A = 0.0;
    double circulation_C = 0.0;
};

// Single-valued harmonic polynomial Lambda(x) spanned by
// {1, x, y, z, xy, xz, yz, x^2 - y^2, 2z^2 - x^2 - y^2}; every element has
// vanishing Laplacian, so adding grad(Lambda) to a potential is a restricted
// (Coulomb-gauge-preserving) gauge transformation.
struct HarmonicGauge {
    std::array<double, 9> coeff{};

    double value(const Position& p) const {
        return coeff[0] + coeff[1] * p.x + coeff[2] * p.y + coeff[3] * p.z +
               coeff[4] * p.x * p.y + coeff[5] * p.x * p.z + coeff[6] * p.y * p.z +
               coeff[7] * (p.x * p.x - p.y * p.y) +
               coeff[8] * (2.0 * p.z * p.z - p.x * p.x - p.y * p.y);
    }

    Vec3 gradient(const Position& p) const {
        return {coeff[1] + coeff[4] * p.y + coeff[5] * p.z +
                    2.0 * p.x * (coeff[7] - coeff[8]),
                coeff[2] + coeff[4] * p.x + coeff[6] * p.z -
                    2.0 * p.y * (coeff[7] + coeff[8]),
                coeff[3] + coeff[5] * p.x + coeff[6] * p.y + 4.0 * coeff[8] * p.z};
    }
};

namespace detail {

// Every vertex and every chord must clear the shell; endpoint checks alone
// miss chords that cut through the cylinder.
inline void require_exterior(const SolenoidConfig& s, const SampledPath& path) {
    for (const Position& p : path.points)
        if (!(p.rho() > s.radius))
            throw PathCrossesSolenoidError("path vertex at rho = " +
                                           std::to_string(p.rho()) +
                                           " is not outside the solenoid");
    for (std::size_t i = 0; i < path.segment_count(); ++i) {
        const auto [a, b] = path.segment(i);
        if (!(segment_min_axis_distance(a, b) > s.radius))
            throw PathCrossesSolenoidError("path segment " + std::to_string(i) +
                                           " cuts through the solenoid");
    }
}

// Integrates (q A + g C + q grad L1 + g grad L2) . dl segment by segment.
// The gauge gradients default to null pointers rather than empty gauges so
// the ungauged hot path stays free of the polynomial evaluations.
inline PhaseResult closed_phase(const DyonCharge& d, const SolenoidConfig& s,
                                const SampledPath& path, const PhysicalConstants& k,
                                const HarmonicGauge* gauge_A,
                                const HarmonicGauge* gauge_C) {
    if (!path.closed)
        throw ParameterError("phase accumulation requires a closed path");
    require_exterior(s, path);
    const int n = winding_number(path);

    // Absolute budget for each circulation, scaled so the final phase
    // comparison against the closed form has an order-1e-12 error floor.
    const double scale = (1.0 + std::abs(s.flux_e) + std::abs(s.flux_m)) *
                         (1.0 + std::abs(static_cast<double>(n)));
    const double tol = 1e-12 * scale / static_cast<double>(path.segment_count());

    double circ_A = 0.0;
    double circ_C = 0.0;
    for (std::size_t i = 0; i < path.segment_count(); ++i) {
        const auto [a, b] = path.segment(i);
        circ_A += segment_line_integral(
            [&](const Position& p) {
                Vec3 v = eval_potentials(s, p).A;
                if (gauge_A) v += gauge_A->gradient(p);
                return v;
            },
            a, b, tol);
        circ_C += segment_line_integral(
            [&](const Position& p) {
                Vec3 v = eval_potentials(s, p).C;
                if (gauge_C) v += gauge_C->gradient(p);
                return v;
            },
            a, b, tol);
    }

    PhaseResult out;
    out.winding = n;
    out.circulation_A = circ_A;
    out.circulation_C = circ_C;
    out.phase = (d.q * circ_A + d.g * circ_C) / (k.hbar * k.c);

    const double expected = n * (d.q * s.flux_m - d.g * s.flux_e) / (k.hbar * k.c);
    if (std::abs(out.phase - expected) >= 1e-9 * (1.0 + std::abs(out.phase)))
        throw ConsistencyError("accumulated phase " + std::to_string(out.phase) +
                               " disagrees with the closed form " +
                               std::to_string(expected));
    return out;
}

}  // namespace detail

// Open-path phase (1/hbar c) Int (q A + g C) . dl to absolute tolerance tol.
inline double open_line_integral(const DyonCharge& d, const SolenoidConfig& s,
                                 const SampledPath& path, double tol,
                                 const PhysicalConstants& k = {}) {
    if (!(tol > 0.0)) throw ParameterError("quadrature tolerance must be positive");
    detail::require_exterior(s, path);
    const double seg_tol = tol / static_cast<double>(path.segment_count());
    double integral = 0.0;
    for (std::size_t i = 0; i < path.segment_count(); ++i) {
        const auto [a, b] = path.segment(i);
        integral += segment_line_integral(
            [&](const Position& p) {
                const FieldSample f = eval_potentials(s, p);
                return f.A * d.q + f.C * d.g;
            },
            a, b, seg_tol);
    }
    return integral / (k.hbar * k.c);
}

// Closed-path phase with winding number and both circulations; the result is
// cross-checked against n (q Phi_m - g Phi_e) / (hbar c).
inline PhaseResult accumulate_phase(const DyonCharge& d, const SolenoidConfig& s,
                                    const SampledPath& path,
                                    const PhysicalConstants& k = {}) {
    return detail::closed_phase(d, s, path, k, nullptr, nullptr);
}

// Same phase with A and C shifted by the gradients of single-valued harmonic
// gauges; must reproduce accumulate_phase because the gradient circulations
// vanish on closed loops.
inline PhaseResult gauge_shifted_phase(const DyonCharge& d, const SolenoidConfig& s,
                                       const SampledPath& path,
                                       const HarmonicGauge& gauge_A,
                                       const HarmonicGauge& gauge_C,
                                       const PhysicalConstants& k = {}) {
    return detail::closed_phase(d, s, path, k, &gauge_A, &gauge_C);
}

// Interior-field rewrite of the closed-path phase,
// n pi R^2 (q B - g E) / (hbar c), exposing the nonlocal dependence on
// fields the particle never samples.
inline double nonlocality_form(const DyonCharge& d, const SolenoidConfig& s, int n,
                               const PhysicalConstants& k = {}) {
    return n * pi * s.radius * s.radius *
           (d.q * s.interior_B() - d.g * s.interior_E()) / (k.hbar * k.c);
}

}  // namespace dyonlab
