#pragma once

// Core value types shared by every module: 3-vectors, cylindrical helpers,
// physical constants, dyon charges, solenoid configuration, and the error
// hierarchy.  Gaussian units throughout; hbar = c = 1 by default.

#include <cmath>
#include <stdexcept>
#include <string>

namespace dyonlab {

constexpr double pi = 3.14159265358979323846;
constexpr double two_pi = 2.0 * pi;

// ---------------------------------------------------------------------------
// Errors.  Every failure mode has a distinct type so callers can react to the
// condition, not to a message string.

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation requested on the solenoid axis (rho = 0) where the cylindrical
// basis and the exterior potentials are singular.
struct AxisError : Error {
    using Error::Error;
};

// Evaluation requested on the shell rho = R where the confined fields jump.
struct BoundaryError : Error {
    using Error::Error;
};

// A constructor or operation received parameters outside its domain.
struct ParameterError : Error {
    using Error::Error;
};

// An open-path phase integral touched or crossed the solenoid shell.
struct PathCrossesSolenoidError : Error {
    using Error::Error;
};

// A sampled path is too coarse for a well-defined winding number.
struct UndersampledPathError : Error {
    using Error::Error;
};

// A duality reduction was asked to eliminate a component that is not there.
struct DegenerateReductionError : Error {
    using Error::Error;
};

// Two independent routes to the same quantity disagreed beyond tolerance.
struct ConsistencyError : Error {
    using Error::Error;
};

// A linear-algebra backend failed to converge.
struct NumericError : Error {
    using Error::Error;
};

// Fringe-shift extraction could not pick a peak (shift at half a window).
struct AmbiguousShiftError : Error {
    using Error::Error;
};

// A scenario or path file failed to parse; carries a 1-based line number.
struct ParseError : Error {
    ParseError(const std::string& what, int line)
        : Error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    int line_number;
};

// ---------------------------------------------------------------------------
// Vectors and positions.

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }

    // Distance from the z axis and azimuth in (-pi, pi].
    double rho() const { return std::hypot(x, y); }
    double phi() const { return std::atan2(y, x); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double& vec_component(Vec3& v, int axis) {
    switch (axis) {
        case 0: return v.x;
        case 1: return v.y;
        default: return v.z;
    }
}

// A point is just a vector from the origin; the solenoid axis is the z axis.
using Position = Vec3;

inline Position position_from_cylindrical(double rho, double phi, double z) {
    return {rho * std::cos(phi), rho * std::sin(phi), z};
}

// Local orthonormal cylindrical frame at a point off the axis.
struct CylindricalBasis {
    Vec3 rho_hat;
    Vec3 phi_hat;
    Vec3 z_hat;
};

inline CylindricalBasis cylindrical_basis(const Position& p) {
    const double rho = p.rho();
    if (rho == 0.0)
        throw AxisError("cylindrical basis undefined on the z axis");
    const Vec3 rho_hat{p.x / rho, p.y / rho, 0.0};
    return {rho_hat, {-rho_hat.y, rho_hat.x, 0.0}, {0.0, 0.0, 1.0}};
}

// ---------------------------------------------------------------------------
// Physical constants (Gaussian units).  The fine-structure constant fixes the
// minimal magnetic charge g0 = e / (2 alpha) appearing in charge quantisation.

struct PhysicalConstants {
    double hbar = 1.0;
    double c = 1.0;
    double alpha = 1.0 / 137.035999;
    double e = 1.0;

    PhysicalConstants() = default;
    PhysicalConstants(double hbar_, double c_, double alpha_, double e_)
        : hbar(hbar_), c(c_), alpha(alpha_), e(e_) {
        validate();
    }

    void validate() const {
        if (!(hbar > 0.0) || !std::isfinite(hbar) || !(c > 0.0) || !std::isfinite(c) ||
            !(alpha > 0.0) || !std::isfinite(alpha) || !(e > 0.0) || !std::isfinite(e))
            throw ParameterError("physical constants must be finite and positive");
    }

    double g0() const { return e / (2.0 * alpha); }
};

// ---------------------------------------------------------------------------
// The two protagonists: a dyon carrying electric charge q and magnetic charge
// g, and an infinite dual solenoid of radius R carrying electric flux Phi_e
// and magnetic flux Phi_m along +z.

struct DyonCharge {
    double q = 0.0;
    double g = 0.0;

    DyonCharge() = default;
    DyonCharge(double q_, double g_) : q(q_), g(g_) {
        if (!std::isfinite(q) || !std::isfinite(g))
            throw ParameterError("dyon charges must be finite");
    }
};

struct SolenoidConfig {
    double radius = 1.0;
    double flux_e = 0.0;
    double flux_m = 0.0;

    SolenoidConfig() = default;
    SolenoidConfig(double radius_, double flux_e_, double flux_m_)
        : radius(radius_), flux_e(flux_e_), flux_m(flux_m_) {
        if (!(radius > 0.0) || !std::isfinite(radius))
            throw ParameterError("solenoid radius must be finite and positive");
        if (!std::isfinite(flux_e) || !std::isfinite(flux_m))
            throw ParameterError("solenoid fluxes must be finite");
    }

    // Uniform interior field strengths E_z and B_z.
    double interior_E() const { return flux_e / (pi * radius * radius); }
    double interior_B() const { return flux_m / (pi * radius * radius); }

    // True when a point sits on the shell up to relative tolerance 1e-12,
    // where the step-function fields are ambiguous.
    bool on_shell(const Position& p) const {
        return std::abs(p.rho() - radius) <= 1e-12 * radius;
    }
};

}  // namespace dyonlab
