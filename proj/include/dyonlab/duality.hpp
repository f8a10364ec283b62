#pragma once

// The U(1) duality action on (q, g) and (Phi_e, Phi_m), its invariants, the
// four reduction procedures that land a general frame on a pure
// Aharonov-Bohm or pure dual (DWF) configuration, and the two equivalent
// reinterpretations of the AB phase.

#include <cmath>
#include <utility>

#include "core.hpp"

namespace dyonlab {

struct DualityAngle {
    double theta = 0.0;

    DualityAngle() = default;
    explicit DualityAngle(double t) : theta(t) {
        if (!std::isfinite(theta)) throw ParameterError("duality angle must be finite");
    }
};

struct DualityFrame {
    DyonCharge dyon;
    double flux_e = 0.0;
    double flux_m = 0.0;

    DualityFrame() = default;
    DualityFrame(DyonCharge d, double fe, double fm) : dyon(d), flux_e(fe), flux_m(fm) {
        if (!std::isfinite(flux_e) || !std::isfinite(flux_m))
            throw ParameterError("fluxes must be finite");
    }
};

// Rotation from the primed frame to the unprimed one:
//   q = q' cos t + g' sin t          g = -q' sin t + g' cos t
//   Phi_e = Phi_e' cos t + Phi_m' sin t
//   Phi_m = -Phi_e' sin t + Phi_m' cos t
// At t = pi/2 this is the discrete swap (q,g,Phi_e,Phi_m) <- (g,-q,Phi_m,-Phi_e).
inline DualityFrame rotate(const DualityFrame& primed, const DualityAngle& angle) {
    const double c = std::cos(angle.theta);
    const double s = std::sin(angle.theta);
    DualityFrame out;
    out.dyon.q = primed.dyon.q * c + primed.dyon.g * s;
    out.dyon.g = -primed.dyon.q * s + primed.dyon.g * c;
    out.flux_e = primed.flux_e * c + primed.flux_m * s;
    out.flux_m = -primed.flux_e * s + primed.flux_m * c;
    return out;
}

// The inverse map (unprimed back to primed); rotate then inverse_rotate at
// the same angle is the identity.
inline DualityFrame inverse_rotate(const DualityFrame& frame, const DualityAngle& angle) {
    const double c = std::cos(angle.theta);
    const double s = std::sin(angle.theta);
    DualityFrame out;
    out.dyon.q = frame.dyon.q * c - frame.dyon.g * s;
    out.dyon.g = frame.dyon.q * s + frame.dyon.g * c;
    out.flux_e = frame.flux_e * c - frame.flux_m * s;
    out.flux_m = frame.flux_e * s + frame.flux_m * c;
    return out;
}

// The quantity every rotation preserves: n (q Phi_m - g Phi_e) / (hbar c).
inline double invariant_phase(const DualityFrame& f, int n,
                              const PhysicalConstants& k = {}) {
    return n * (f.dyon.q * f.flux_m - f.dyon.g * f.flux_e) / (k.hbar * k.c);
}

struct ReductionResult {
    double theta = 0.0;
    DualityFrame frame;
};

// The four reductions pick the rotation angle that zeroes one component.
// Angles come from the two-argument arctangent, which puts the surviving
// component at +hypot(u, v) regardless of quadrant; the duality-invariant
// phase, not the component sign, is the contract.

// Zeroes the magnetic charge: theta = atan2(g', q'), q -> hypot(q', g').
inline ReductionResult reduce_ab_by_charge(const DualityFrame& primed) {
    if (primed.dyon.q == 0.0)
        throw DegenerateReductionError(
            "electric reduction needs q' != 0; use the DWF charge reduction");
    const double theta = std::atan2(primed.dyon.g, primed.dyon.q);
    return {theta, rotate(primed, DualityAngle{theta})};
}

// Zeroes the electric flux: theta = atan2(-Phi_e', Phi_m').
inline ReductionResult reduce_ab_by_flux(const DualityFrame& primed) {
    if (primed.flux_m == 0.0)
        throw DegenerateReductionError(
            "magnetic-flux reduction needs Phi_m' != 0; use the DWF flux reduction");
    const double theta = std::atan2(-primed.flux_e, primed.flux_m);
    return {theta, rotate(primed, DualityAngle{theta})};
}

// Zeroes the electric charge: theta = atan2(-q', g').
inline ReductionResult reduce_dwf_by_charge(const DualityFrame& primed) {
    if (primed.dyon.g == 0.0)
        throw DegenerateReductionError(
            "magnetic reduction needs g' != 0; use the AB charge reduction");
    const double theta = std::atan2(-primed.dyon.q, primed.dyon.g);
    return {theta, rotate(primed, DualityAngle{theta})};
}

// Zeroes the magnetic flux: theta = atan2(Phi_m', Phi_e').
inline ReductionResult reduce_dwf_by_flux(const DualityFrame& primed) {
    if (primed.flux_e == 0.0)
        throw DegenerateReductionError(
            "electric-flux reduction needs Phi_e' != 0; use the AB flux reduction");
    const double theta = std::atan2(primed.flux_m, primed.flux_e);
    return {theta, rotate(primed, DualityAngle{theta})};
}

// g' Phi_m' + q' Phi_e'.  Vanishes exactly when the charge-side and
// flux-side AB reduction angles coincide, i.e. when one rotation
// simultaneously purifies dyon and solenoid.
inline double orthogonality_residual(const DualityFrame& primed) {
    return primed.dyon.g * primed.flux_m + primed.dyon.q * primed.flux_e;
}

// Two rotated readings of the AB phase q Phi_m / (hbar c): a dyon of charges
// (q cos t, q sin t) against the bare flux, and the bare charge against
// fluxes (-Phi_m sin t, Phi_m cos t).  Both collapse to the same value.
struct AbReinterpretations {
    double dyon_against_flux = 0.0;
    double charge_against_fluxes = 0.0;
};

inline AbReinterpretations ab_reinterpretations(double q, double flux_m, double theta,
                                                const PhysicalConstants& k = {}) {
    if (!std::isfinite(theta)) throw ParameterError("duality angle must be finite");
    const double qp = q * std::cos(theta);
    const double gp = q * std::sin(theta);
    const double fep = -flux_m * std::sin(theta);
    const double fmp = flux_m * std::cos(theta);
    return {std::hypot(qp, gp) * flux_m / (k.hbar * k.c),
            q * std::hypot(fep, fmp) / (k.hbar * k.c)};
}

}  // namespace dyonlab
