#pragma once

// Energy levels of a dyon constrained to a circle of radius b > R around the
// solenoid.  The analytic spectrum is
//     E_l = hbar^2 (l - alpha_f)^2 / (2 m b^2),   l integer,
// with the flux parameter alpha_f = (q Phi_m - g Phi_e) / (2 pi hbar c); an
// independent finite-difference eigensolver reproduces it on a periodic
// azimuthal grid.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "core.hpp"
#include "duality.hpp"

namespace dyonlab {

struct RingConfig {
    double b = 2.0;
    double mass = 1.0;
    double alpha_f = 0.0;

    RingConfig() = default;
    RingConfig(double b_, double mass_, double alpha_f_)
        : b(b_), mass(mass_), alpha_f(alpha_f_) {
        if (!(b > 0.0) || !std::isfinite(b)) throw ParameterError("ring radius must be positive");
        if (!(mass > 0.0) || !std::isfinite(mass)) throw ParameterError("mass must be positive");
        if (!std::isfinite(alpha_f)) throw ParameterError("flux parameter must be finite");
    }

    // Builds the config from physical charges and fluxes, enforcing that the
    // ring clears the solenoid.
    static RingConfig from_frame(const DualityFrame& f, const SolenoidConfig& s, double b,
                                 double mass, const PhysicalConstants& k = {}) {
        if (!(b > s.radius))
            throw ParameterError("ring radius must exceed the solenoid radius");
        const double alpha =
            (f.dyon.q * f.flux_m - f.dyon.g * f.flux_e) / (two_pi * k.hbar * k.c);
        return RingConfig(b, mass, alpha);
    }
};

enum class SpectrumSource { analytic, finite_difference };

// The finite-difference discretisations of the kinetic operator
// (1/2m)(-(i hbar / b) d/dphi - hbar alpha_f / b)^2 on the periodic grid.
//   phase_hopping: dressed-link form (2 - e^{-i a h} S - e^{+i a h} S*)/h^2;
//                  exactly periodic and reflection-symmetric in alpha_f.
//   central:       plain central first/second differences with the exact
//                  alpha_f^2 shift; kept for scheme comparison, first-order
//                  symbol error in the cross term.
//   twisted_boundary: free rotor with boundary phase e^{-i 2 pi a}; gauge
//                  equivalent route used as a cross-check.
enum class FdScheme { phase_hopping, central, twisted_boundary };

struct RingLevel {
    int index;  // angular quantum number label l
    double energy;
};

struct RingSpectrum {
    std::vector<RingLevel> levels;  // ascending by energy
    SpectrumSource source = SpectrumSource::analytic;
};

// E_l over l in [l_min, l_max], sorted ascending with degeneracies kept.
inline RingSpectrum analytic_levels(const RingConfig& cfg, int l_min, int l_max,
                                    const PhysicalConstants& k = {}) {
    if (l_min > l_max) throw ParameterError("empty level range");
    RingSpectrum out;
    out.source = SpectrumSource::analytic;
    const double scale = k.hbar * k.hbar / (2.0 * cfg.mass * cfg.b * cfg.b);
    for (int l = l_min; l <= l_max; ++l) {
        const double u = l - cfg.alpha_f;
        out.levels.push_back({l, scale * u * u});
    }
    std::stable_sort(out.levels.begin(), out.levels.end(),
                     [](const RingLevel& a, const RingLevel& b) { return a.energy < b.energy; });
    return out;
}

// Normalised eigenfunction on the arclength domain [0, 2 pi b).
inline std::complex<double> analytic_wavefunction(const RingConfig& cfg, int l, double phi) {
    const double norm = 1.0 / std::sqrt(two_pi * cfg.b);
    return std::polar(norm, l * phi);
}

// Lowest n_levels eigenvalues of the discretised ring Hamiltonian.  FD level
// labels are assigned by energy rank against the analytic ordering, so the
// two spectra pair up index by index.
inline RingSpectrum fd_levels(const RingConfig& cfg, int n_grid, int n_levels,
                              const PhysicalConstants& k = {},
                              FdScheme scheme = FdScheme::phase_hopping) {
    if (n_grid < 64 || n_grid % 2 != 0)
        throw ParameterError("FD grid must be even and at least 64");
    if (n_levels < 1 || n_levels > n_grid / 4)
        throw ParameterError("n_levels must lie in [1, n_grid/4]");

    using Complex = std::complex<double>;
    const double h = two_pi / n_grid;
    const double scale = k.hbar * k.hbar / (2.0 * cfg.mass * cfg.b * cfg.b);
    const double a = cfg.alpha_f;

    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(n_grid, n_grid);
    const auto wrap = [&](int j) { return (j % n_grid + n_grid) % n_grid; };
    for (int j = 0; j < n_grid; ++j) {
        Complex diag, hop_next;  // hop_next couples node j to node j+1
        switch (scheme) {
            case FdScheme::phase_hopping:
                diag = 2.0 / (h * h);
                hop_next = -std::polar(1.0, -a * h) / (h * h);
                break;
            case FdScheme::central:
                diag = 2.0 / (h * h) + a * a;
                hop_next = Complex(-1.0 / (h * h), a / h);
                break;
            case FdScheme::twisted_boundary:
                diag = 2.0 / (h * h);
                hop_next = Complex(-1.0 / (h * h), 0.0);
                if (j == n_grid - 1) hop_next *= std::polar(1.0, -two_pi * a);
                break;
        }
        H(j, j) = scale * diag;
        H(j, wrap(j + 1)) += scale * hop_next;
        H(wrap(j + 1), j) += scale * std::conj(hop_next);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericError("ring eigen-decomposition did not converge");

    const RingSpectrum reference = analytic_levels(
        cfg, -(n_levels + 4 + static_cast<int>(std::ceil(std::abs(a)))),
        n_levels + 4 + static_cast<int>(std::ceil(std::abs(a))), k);

    RingSpectrum out;
    out.source = SpectrumSource::finite_difference;
    for (int i = 0; i < n_levels; ++i)
        out.levels.push_back({reference.levels[i].index, solver.eigenvalues()[i]});
    return out;
}

// Level curves over an alpha_f sweep plus the two exact set symmetries:
// shifting alpha_f by one relabels l, negating it reflects l.
struct SpectralFlowRow {
    double alpha_f;
    std::vector<double> energies;  // ascending
};

inline std::vector<SpectralFlowRow> spectral_flow(const RingConfig& base,
                                                  const std::vector<double>& alphas,
                                                  int n_levels,
                                                  const PhysicalConstants& k = {}) {
    if (n_levels < 1) throw ParameterError("need at least one level");
    std::vector<SpectralFlowRow> table;
    table.reserve(alphas.size());
    for (double a : alphas) {
        if (!std::isfinite(a)) throw ParameterError("sweep values must be finite");
        const RingConfig cfg(base.b, base.mass, a);
        const int span = n_levels + 2 + static_cast<int>(std::ceil(std::abs(a)));
        const RingSpectrum spec = analytic_levels(cfg, -span, span, k);
        SpectralFlowRow row{a, {}};
        for (int i = 0; i < n_levels; ++i) row.energies.push_back(spec.levels[i].energy);
        table.push_back(std::move(row));
    }
    return table;
}

}  // namespace dyonlab
