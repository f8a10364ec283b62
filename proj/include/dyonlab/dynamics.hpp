#pragma once

// Classical mechanics of a dyon near the dual solenoid: the generalised
// Lagrangian, Lorentz force, canonical momentum and Hamiltonian, an RK4
// integrator, and two finite-difference residual checks (Euler-Lagrange
// identity and the translation quasi-symmetry of the interior Lagrangian).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "fields.hpp"

namespace dyonlab {

struct ParticleState {
    double mass = 1.0;
    Position position;
    Vec3 velocity;
    double time = 0.0;

    ParticleState() = default;
    ParticleState(double mass_, Position x, Vec3 v, double t = 0.0)
        : mass(mass_), position(x), velocity(v), time(t) {
        if (!(mass > 0.0) || !std::isfinite(mass))
            throw ParameterError("particle mass must be finite and positive");
    }

    // The model is non-relativistic; flag states that stray past 0.1 c.
    bool beyond_nonrelativistic_limit(const PhysicalConstants& k = {}) const {
        return velocity.norm() > 0.1 * k.c;
    }
};

// Uniformly sampled trajectory. The grid step is taken from the first pair
// of times and enforced across the whole record.
struct Trajectory {
    std::vector<ParticleState> states;

    double dt() const {
        if (states.size() < 2) throw ParameterError("trajectory needs at least 2 states");
        return states[1].time - states[0].time;
    }

    void validate_uniform() const {
        const double step = dt();
        if (!(step > 0.0)) throw ParameterError("trajectory times must increase");
        for (std::size_t i = 1; i < states.size(); ++i) {
            const double gap = states[i].time - states[i - 1].time;
            if (std::abs(gap - step) > 1e-9 * step)
                throw ParameterError("trajectory time grid is not uniform at index " +
                                     std::to_string(i));
        }
    }
};

enum class Region { interior, exterior };

namespace detail {

// Both potentials are proportional to the same azimuthal profile; the
// combination W = q A + g C and the curl G = curl(g A - q C) are all the
// dynamics needs.  Interior forms are the linear-in-x expressions valid
// inside the shell; exterior forms are the 1/rho circulation fields.
inline Vec3 combined_potential(const DyonCharge& d, const SolenoidConfig& s,
                               const Position& p, Region region) {
    if (p.rho() == 0.0)
        throw AxisError("potential evaluation on the solenoid axis");
    const double w = d.q * s.flux_m - d.g * s.flux_e;
    if (region == Region::interior) {
        const double scale = w / (two_pi * s.radius * s.radius);
        return {-scale * p.y, scale * p.x, 0.0};
    }
    const double rho2 = p.rho() * p.rho();
    const double scale = w / (two_pi * rho2);
    return {-scale * p.y, scale * p.x, 0.0};
}

// curl(g A - q C) = g B + q E: constant inside, zero outside.  Kept in
// closed form so the distributional shell layer cannot contaminate
// trajectories that stay off the shell.
inline Vec3 mixed_curl(const DyonCharge& d, const SolenoidConfig& s, Region region) {
    if (region == Region::exterior) return {};
    return {0.0, 0.0, (d.g * s.flux_m + d.q * s.flux_e) / (pi * s.radius * s.radius)};
}

}  // namespace detail

// L = m v^2 / 2 + (v/c) . (q A + g C) + x . curl(g A - q C), with the region
// selecting which closed-form potentials apply.
inline double lagrangian(const DyonCharge& d, const SolenoidConfig& s,
                         const ParticleState& st, Region region,
                         const PhysicalConstants& k = {}) {
    const Vec3 w = detail::combined_potential(d, s, st.position, region);
    return 0.5 * st.mass * st.velocity.dot(st.velocity) +
           st.velocity.dot(w) / k.c + st.position.dot(detail::mixed_curl(d, s, region));
}

// F = q (E + v x B / c) + g (B - v x E / c) from the step-function fields.
inline Vec3 generalized_force(const DyonCharge& d, const SolenoidConfig& s,
                              const Position& p, const Vec3& v,
                              const PhysicalConstants& k = {}) {
    const FieldSample f = eval_fields(s, p);
    return f.E * d.q + v.cross(f.B) * (d.q / k.c) + f.B * d.g -
           v.cross(f.E) * (d.g / k.c);
}

// p = m v + (q A + g C) / c with the branch picked by the actual radius.
inline Vec3 canonical_momentum(const DyonCharge& d, const SolenoidConfig& s,
                               const ParticleState& st,
                               const PhysicalConstants& k = {}) {
    const Region region =
        st.position.rho() < s.radius ? Region::interior : Region::exterior;
    return st.velocity * st.mass +
           detail::combined_potential(d, s, st.position, region) / k.c;
}

// H = (p - (q A + g C)/c)^2 / (2m), evaluated literally through the
// canonical momentum so the kinetic-energy identity is exercised rather
// than assumed.
inline double hamiltonian(const DyonCharge& d, const SolenoidConfig& s,
                          const ParticleState& st, const PhysicalConstants& k = {}) {
    const Region region =
        st.position.rho() < s.radius ? Region::interior : Region::exterior;
    const Vec3 kinetic = canonical_momentum(d, s, st, k) -
                         detail::combined_potential(d, s, st.position, region) / k.c;
    return kinetic.dot(kinetic) / (2.0 * st.mass);
}

// Fourth-order Runge-Kutta under the generalised Lorentz force.  Every
// evaluation point must stay strictly inside or strictly outside the shell;
// a crossing step is rejected because the Lagrangian model does not define
// mixed trajectories.
inline Trajectory integrate_rk4(const DyonCharge& d, const SolenoidConfig& s,
                                const ParticleState& initial, double dt, int n_steps,
                                const PhysicalConstants& k = {}) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ParameterError("dt must be positive");
    if (n_steps < 1) throw ParameterError("need at least one step");
    const bool interior = initial.position.rho() < s.radius;

    const auto accel = [&](const Position& x, const Vec3& v) {
        if ((x.rho() < s.radius) != interior || s.on_shell(x))
            throw ParameterError("trajectory crossed the solenoid shell");
        return generalized_force(d, s, x, v, k) / initial.mass;
    };

    Trajectory traj;
    traj.states.reserve(n_steps + 1);
    traj.states.push_back(initial);
    Position x = initial.position;
    Vec3 v = initial.velocity;
    double t = initial.time;
    for (int i = 0; i < n_steps; ++i) {
        const Vec3 k1x = v, k1v = accel(x, v);
        const Vec3 k2x = v + k1v * (dt / 2), k2v = accel(x + k1x * (dt / 2), v + k1v * (dt / 2));
        const Vec3 k3x = v + k2v * (dt / 2), k3v = accel(x + k2x * (dt / 2), v + k2v * (dt / 2));
        const Vec3 k4x = v + k3v * dt, k4v = accel(x + k3x * dt, v + k3v * dt);
        x += (k1x + (k2x + k3x) * 2.0 + k4x) * (dt / 6.0);
        v += (k1v + (k2v + k3v) * 2.0 + k4v) * (dt / 6.0);
        t = initial.time + (i + 1) * dt;
        traj.states.emplace_back(initial.mass, x, v, t);
    }
    return traj;
}

// Checks the Euler-Lagrange identity on a sampled trajectory: the
// finite-difference expression d/dt(dL/dv) - dL/dx, with every derivative
// taken numerically on the full Lagrangian, must reproduce
// m a - F_lorentz for any kinematically consistent trajectory.  The
// returned value is the worst interior-node norm of the difference.
inline double euler_lagrange_residual(const DyonCharge& d, const SolenoidConfig& s,
                                      const Trajectory& traj, Region region,
                                      const PhysicalConstants& k = {}) {
    traj.validate_uniform();
    if (traj.states.size() < 3)
        throw ParameterError("residual needs at least 3 trajectory states");
    for (const ParticleState& st : traj.states) {
        const bool inside = st.position.rho() < s.radius;
        if (inside != (region == Region::interior) || s.on_shell(st.position))
            throw ParameterError("trajectory leaves the declared region");
    }
    const double dt = traj.dt();
    const double hx = 1e-5 * s.radius;

    const auto lagr = [&](const Position& x, const Vec3& v) {
        return lagrangian(d, s, ParticleState(traj.states[0].mass, x, v), region, k);
    };
    const auto dL_dv = [&](const ParticleState& st) {
        const double hv = 1e-5 * (1.0 + st.velocity.norm());
        Vec3 grad;
        for (int axis = 0; axis < 3; ++axis) {
            Vec3 vp = st.velocity, vm = st.velocity;
            vec_component(vp, axis) += hv;
            vec_component(vm, axis) -= hv;
            vec_component(grad, axis) =
                (lagr(st.position, vp) - lagr(st.position, vm)) / (2.0 * hv);
        }
        return grad;
    };

    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < traj.states.size(); ++i) {
        const ParticleState& st = traj.states[i];
        const Vec3 dpdt =
            (dL_dv(traj.states[i + 1]) - dL_dv(traj.states[i - 1])) / (2.0 * dt);
        Vec3 dL_dx;
        for (int axis = 0; axis < 3; ++axis) {
            Position xp = st.position, xm = st.position;
            vec_component(xp, axis) += hx;
            vec_component(xm, axis) -= hx;
            vec_component(dL_dx, axis) =
                (lagr(xp, st.velocity) - lagr(xm, st.velocity)) / (2.0 * hx);
        }
        const Vec3 accel =
            (traj.states[i + 1].velocity - traj.states[i - 1].velocity) / (2.0 * dt);
        const Vec3 force = generalized_force(d, s, st.position, st.velocity, k);
        const Vec3 residual = (dpdt - dL_dx) - (accel * st.mass - force);
        worst = std::max(worst, residual.norm());
    }
    return worst;
}

// Quasi-symmetry of the interior Lagrangian under x -> x + eps n_hat: the
// change of L must be the total time derivative of
//   K = (q Phi_m - g Phi_e)(eps_x y - eps_y x) / (2 pi R^2 c)
//       + t (eps n_hat) . curl(g A - q C).
// Returns the worst |Delta L - dK/dt| over interior grid nodes, with dK/dt
// by central differences along the trajectory.
inline double translation_symmetry_residual(const DyonCharge& d, const SolenoidConfig& s,
                                            const Trajectory& traj, double eps,
                                            const Vec3& n_hat,
                                            const PhysicalConstants& k = {}) {
    if (!(eps > 0.0)) throw ParameterError("translation magnitude must be positive");
    if (std::abs(n_hat.norm() - 1.0) > 1e-9)
        throw ParameterError("translation direction must be a unit vector");
    traj.validate_uniform();
    if (traj.states.size() < 3)
        throw ParameterError("residual needs at least 3 trajectory states");

    const Vec3 shift = n_hat * eps;
    const Vec3 curl = detail::mixed_curl(d, s, Region::interior);
    const double w_over_c = (d.q * s.flux_m - d.g * s.flux_e) /
                            (two_pi * s.radius * s.radius * k.c);

    const auto K_at = [&](const ParticleState& st) {
        return w_over_c * (shift.x * st.position.y - shift.y * st.position.x) +
               st.time * shift.dot(curl);
    };
    const auto delta_L = [&](const ParticleState& st) {
        ParticleState moved = st;
        moved.position += shift;
        return lagrangian(d, s, moved, Region::interior, k) -
               lagrangian(d, s, st, Region::interior, k);
    };

    const double dt = traj.dt();
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < traj.states.size(); ++i) {
        const double dK_dt = (K_at(traj.states[i + 1]) - K_at(traj.states[i - 1])) / (2.0 * dt);
        worst = std::max(worst, std::abs(delta_L(traj.states[i]) - dK_dt));
    }
    return worst;
}

// Trajectory CSV: header row, then t,x,y,z,vx,vy,vz with 17 significant
// digits so files round-trip bit-exactly.
inline void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    out << "t,x,y,z,vx,vy,vz\n";
    char buf[32];
    const auto put = [&](double v, char sep) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << buf << sep;
    };
    for (const ParticleState& st : traj.states) {
        put(st.time, ',');
        put(st.position.x, ',');
        put(st.position.y, ',');
        put(st.position.z, ',');
        put(st.velocity.x, ',');
        put(st.velocity.y, ',');
        put(st.velocity.z, '\n');
    }
}

inline Trajectory read_trajectory_csv(std::istream& in, double mass) {
    Trajectory traj;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty() || line == "t,x,y,z,vx,vy,vz") continue;
        std::istringstream fields(line);
        double v[7];
        for (int i = 0; i < 7; ++i) {
            std::string cell;
            if (!std::getline(fields, cell, ','))
                throw ParseError("expected 7 comma-separated values", line_number);
            try {
                std::size_t used = 0;
                v[i] = std::stod(cell, &used);
                if (used != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw ParseError("bad numeric field '" + cell + "'", line_number);
            }
        }
        traj.states.emplace_back(mass, Position{v[1], v[2], v[3]},
                                 Vec3{v[4], v[5], v[6]}, v[0]);
    }
    if (traj.states.size() >= 2) traj.validate_uniform();
    return traj;
}

}  // namespace dyonlab

