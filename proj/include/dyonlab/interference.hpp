#pragma once

// Two-slit interference with the solenoid threaded between the classical
// paths.  Geometry (z = 0 plane throughout):
//
//   - solenoid axis: the z axis through the origin,
//   - optical axis: the x axis, beam travelling toward +x,
//   - slit screen at x = -axis_offset, detection screen at x = l - axis_offset,
//   - transverse screen coordinate u = y; slit 1 sits at u = +d/2,
//     slit 2 at u = -d/2 (plus any common transverse offset).
//
// Traversing path 2 forward and path 1 backward runs counter-clockwise
// around the origin, so the loop winds once and the phase difference
// (Int_2 - Int_1) equals the closed-loop phase with n = +1.  A positive
// phase delta on slit 2 drags the fringes toward slit 2 by l lambda_bar
// delta / d; shifts are reported positive in that direction.

#include <cmath>
#include <limits>
#include <vector>

#include "core.hpp"
#include "path.hpp"
#include "phase.hpp"

namespace dyonlab {

struct TwoSlitGeometry {
    double l = 100.0;            // slit screen to detection screen
    double d = 5.0;              // slit separation
    double source_distance = 50.0;
    double axis_offset = 50.0;   // slit screen to solenoid axis, along the beam
    double transverse_offset = 0.0;  // moves the whole apparatus off the axis
    double slit_width = 0.0;     // 0 = point slits, flat envelope

    TwoSlitGeometry() = default;
    TwoSlitGeometry(double l_, double d_, double source_distance_, double axis_offset_,
                    double transverse_offset_ = 0.0, double slit_width_ = 0.0)
        : l(l_), d(d_), source_distance(source_distance_), axis_offset(axis_offset_),
          transverse_offset(transverse_offset_), slit_width(slit_width_) {
        if (!(l > 0.0) || !(d > 0.0) || !(source_distance > 0.0))
            throw ParameterError("screen separation, slit separation and source distance must be positive");
        if (!(axis_offset > 0.0) || !(axis_offset < l))
            throw ParameterError("solenoid axis must lie strictly between the screens");
        if (!(slit_width >= 0.0) || !std::isfinite(slit_width) ||
            !std::isfinite(transverse_offset))
            throw ParameterError("slit width and transverse offset must be finite");
    }

    Position source() const { return {-axis_offset - source_distance, transverse_offset, 0.0}; }
    Position slit1() const { return {-axis_offset, transverse_offset + 0.5 * d, 0.0}; }
    Position slit2() const { return {-axis_offset, transverse_offset - 0.5 * d, 0.0}; }
    Position screen_center() const { return {l - axis_offset, transverse_offset, 0.0}; }
};

// (1/hbar c)(Int_2 - Int_1) of (q A + g C) . dl along the two classical
// paths; equals the closed-loop phase of the enclosed flux when the axis
// threads the loop and vanishes when it does not.
inline double path_phase_difference(const DyonCharge& d, const SolenoidConfig& s,
                                    const TwoSlitGeometry& geo,
                                    const PhysicalConstants& k = {}) {
    const double tol = 1e-12 * (1.0 + std::abs(s.flux_e) + std::abs(s.flux_m));
    const SampledPath path1 = make_path({geo.source(), geo.slit1(), geo.screen_center()}, false);
    const SampledPath path2 = make_path({geo.source(), geo.slit2(), geo.screen_center()}, false);
    return open_line_integral(d, s, path2, tol, k) - open_line_integral(d, s, path1, tol, k);
}

// The closed comparison loop: path 2 forward, path 1 reversed; winds +1
// around the axis in the standard geometry.
inline SampledPath interference_loop(const TwoSlitGeometry& geo) {
    return make_path({geo.source(), geo.slit2(), geo.screen_center(), geo.slit1()}, true);
}

struct FringePattern {
    std::vector<double> u;          // screen coordinates relative to the center
    std::vector<double> intensity;  // |psi_1 + e^{i delta} psi_2|^2
    double delta = 0.0;
    double fringe_spacing = 0.0;    // 2 pi l lambda_bar / d
    bool far_field_warning = false;
};

// Paraxial two-path pattern: each slit contributes the quadratic path phase
// (u -+ d/2)^2 / (2 l lambda_bar); a nonzero slit width multiplies both
// amplitudes by the single-slit sinc envelope.  The window defaults to four
// fringe periods centered on the optical axis.
inline FringePattern fringe_pattern(const TwoSlitGeometry& geo, double delta,
                                    double lambda_bar, int n_samples,
                                    double window_half_width = -1.0) {
    if (!(lambda_bar > 0.0) || !std::isfinite(lambda_bar))
        throw ParameterError("reduced wavelength must be positive");
    if (n_samples < 16) throw ParameterError("need at least 16 screen samples");
    if (!std::isfinite(delta)) throw ParameterError("phase must be finite");

    FringePattern out;
    out.delta = delta;
    out.fringe_spacing = two_pi * geo.l * lambda_bar / geo.d;
    out.far_field_warning = geo.l < 10.0 * geo.d;
    const double half =
        window_half_width > 0.0 ? window_half_width : 2.0 * out.fringe_spacing;

    out.u.resize(n_samples);
    out.intensity.resize(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double u = -half + (2.0 * half) * i / n_samples;  // periodic grid
        const double phase1 = (u - 0.5 * geo.d) * (u - 0.5 * geo.d) / (2.0 * geo.l * lambda_bar);
        const double phase2 = (u + 0.5 * geo.d) * (u + 0.5 * geo.d) / (2.0 * geo.l * lambda_bar);
        double envelope = 1.0;
        if (geo.slit_width > 0.0) {
            const double arg = geo.slit_width * u / (2.0 * lambda_bar * geo.l);
            envelope = arg == 0.0 ? 1.0 : std::sin(arg) / arg;
        }
        const double re = std::cos(phase1) + std::cos(phase2 + delta);
        const double im = std::sin(phase1) + std::sin(phase2 + delta);
        out.u[i] = u;
        out.intensity[i] = envelope * envelope * (re * re + im * im);
    }
    return out;
}

// Sub-grid displacement of pattern b relative to pattern a via the circular
// cross-correlation peak with parabolic refinement.  Because the pattern is
// periodic the peak lattice is degenerate; the candidate nearest zero shift
// wins, making the result well-defined modulo one fringe.  Positive return
// means motion toward slit 2.
inline double extract_shift(const FringePattern& a, const FringePattern& b) {
    const std::size_t n = a.u.size();
    if (n != b.u.size() || n < 4) throw ParameterError("patterns must share one grid");
    for (std::size_t i = 0; i < n; ++i)
        if (a.u[i] != b.u[i]) throw ParameterError("patterns must share one grid");
    const double du = a.u[1] - a.u[0];

    const long ln = static_cast<long>(n);
    const auto corr = [&](long shift) {
        double sum = 0.0;
        for (long i = 0; i < ln; ++i) {
            long j = (i + shift) % ln;
            if (j < 0) j += ln;
            sum += a.intensity[i] * b.intensity[j];
        }
        return sum;
    };

    const long half = ln / 2;
    std::vector<double> c(n);
    double best = -std::numeric_limits<double>::infinity();
    for (long s = -half; s < ln - half; ++s) {
        c[s + half] = corr(s);
        best = std::max(best, c[s + half]);
    }
    // All near-ties with the maximum are genuine peaks of the periodic
    // correlation; pick the one closest to zero displacement.
    long peak = 0;
    bool found = false;
    for (long s = -half; s < ln - half; ++s) {
        if (c[s + half] >= best * (1.0 - 1e-9)) {
            if (!found || std::abs(s) < std::abs(peak)) {
                peak = s;
                found = true;
            }
        }
    }
    if (peak == -half)
        throw AmbiguousShiftError("correlation peak at the window boundary");

    const double cm = c[(peak - 1 + half + ln) % ln];
    const double c0 = c[peak + half];
    const double cp = c[(peak + 1 + half) % ln];
    const double denom = cm - 2.0 * c0 + cp;
    const double frac = denom == 0.0 ? 0.0 : 0.5 * (cm - cp) / denom;

    // b displaced by +shift grid steps along +u; slit 2 sits on the -u side.
    const double shift_u = (static_cast<double>(peak) + frac) * du;
    return -shift_u;
}

// Phase of the combined Aharonov-Bohm / dual configuration with the
// elementary charges tied by the quantisation condition g0 = e / (2 alpha):
// delta = n pi R^2 e (B - E / (2 alpha)) / (hbar c).
inline double dirac_scenario(double B, double E, double R, int n,
                             const PhysicalConstants& k = {}) {
    if (!(R > 0.0) || !std::isfinite(R)) throw ParameterError("radius must be positive");
    if (!std::isfinite(B) || !std::isfinite(E)) throw ParameterError("fields must be finite");
    return n * pi * R * R * k.e * (B - E / (2.0 * k.alpha)) / (k.hbar * k.c);
}

// de Broglie reduced wavelength for the fringe-shift cross-checks.
inline double lambda_bar_for(double mass, double speed, const PhysicalConstants& k = {}) {
    if (!(mass > 0.0) || !(speed > 0.0))
        throw ParameterError("mass and speed must be positive");
    return k.hbar / (mass * speed);
}

}  // namespace dyonlab
