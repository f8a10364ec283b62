#pragma once

// Flat `key = value` scenario files.  Unknown keys are rejected by name,
// duplicates are conflicts, and every diagnostic carries its line number.
// Required block: q, g, R, Phi_e, Phi_m.  Everything else is optional and
// activates the corresponding subcommand features.

#include <cmath>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "duality.hpp"

namespace dyonlab {

struct Scenario {
    PhysicalConstants constants;
    DyonCharge dyon;
    SolenoidConfig solenoid;
    unsigned long seed = 0;

    std::optional<std::string> path_file;        // `phase` input polyline
    std::optional<std::string> trajectory_file;  // dynamics CSV input

    // ring block
    double ring_radius_factor = 2.0;  // b = factor * R when b not given
    std::optional<double> ring_b;
    double ring_mass = 1.0;
    int ring_n_grid = 2048;
    int ring_n_levels = 10;
    std::optional<double> sweep_min, sweep_max;
    int sweep_steps = 9;

    // interference block
    double fringe_l = 100.0;
    double fringe_d = 5.0;
    double source_distance = 50.0;
    double axis_offset = 50.0;
    double slit_width = 0.0;
    double lambda_bar = 10.0;
    std::optional<double> delta_override;
    int n_samples = 4096;

    // oracle block
    double oracle_rho_max_factor = 8.0;
    int oracle_n_points = 4096;
    std::optional<double> oracle_sigma;  // default R/200

    DualityFrame frame() const {
        return DualityFrame(dyon, solenoid.flux_e, solenoid.flux_m);
    }
    double ring_b_value() const {
        return ring_b ? *ring_b : ring_radius_factor * solenoid.radius;
    }
    double oracle_sigma_value() const {
        return oracle_sigma ? *oracle_sigma : solenoid.radius / 200.0;
    }
    TwoSlitGeometry geometry() const {
        return TwoSlitGeometry(fringe_l, fringe_d, source_distance, axis_offset, 0.0,
                               slit_width);
    }
};

inline Scenario parse_scenario(std::istream& in) {
    static const std::set<std::string> known = {
        "hbar", "c", "alpha", "e",
        "q", "g", "R", "Phi_e", "Phi_m",
        "seed", "path", "trajectory",
        "ring_b", "ring_mass", "ring_n_grid", "ring_n_levels",
        "sweep_min", "sweep_max", "sweep_steps",
        "fringe_l", "fringe_d", "source_distance", "axis_offset", "slit_width",
        "lambda_bar", "delta", "n_samples",
        "oracle_rho_max", "oracle_n_points", "oracle_sigma",
    };

    std::map<std::string, std::pair<std::string, int>> values;
    std::string line;
    int line_number = 0;
    std::vector<std::string> unknown;
    while (std::getline(in, line)) {
        ++line_number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected `key = value`", line_number);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ParseError("expected `key = value`", line_number);
        if (!known.count(key)) {
            unknown.push_back(key);
            continue;
        }
        if (values.count(key))
            throw ParseError("duplicate key '" + key + "' (first at line " +
                                 std::to_string(values[key].second) + ")",
                             line_number);
        values[key] = {value, line_number};
    }
    if (!unknown.empty()) {
        std::string all;
        for (const std::string& k : unknown) all += (all.empty() ? "" : ", ") + k;
        throw Error("unknown scenario keys: " + all);
    }

    const auto get_double = [&](const std::string& key) -> std::optional<double> {
        const auto it = values.find(key);
        if (it == values.end()) return std::nullopt;
        try {
            std::size_t used = 0;
            const double v = std::stod(it->second.first, &used);
            if (used != it->second.first.size()) throw std::invalid_argument(key);
            if (!std::isfinite(v)) throw std::invalid_argument(key);
            return v;
        } catch (const std::exception&) {
            throw ParseError("bad numeric value '" + it->second.first + "' for " + key,
                             it->second.second);
        }
    };
    const auto get_int = [&](const std::string& key) -> std::optional<long> {
        const auto it = values.find(key);
        if (it == values.end()) return std::nullopt;
        try {
            std::size_t used = 0;
            const long v = std::stol(it->second.first, &used);
            if (used != it->second.first.size()) throw std::invalid_argument(key);
            return v;
        } catch (const std::exception&) {
            throw ParseError("bad integer value '" + it->second.first + "' for " + key,
                             it->second.second);
        }
    };
    const auto require = [&](const std::string& key) {
        if (!values.count(key)) throw Error("missing required scenario key: " + key);
    };

    for (const char* key : {"q", "g", "R", "Phi_e", "Phi_m"}) require(key);

    Scenario sc;
    PhysicalConstants defaults;
    sc.constants = PhysicalConstants(
        get_double("hbar").value_or(defaults.hbar), get_double("c").value_or(defaults.c),
        get_double("alpha").value_or(defaults.alpha), get_double("e").value_or(defaults.e));
    sc.dyon = DyonCharge(*get_double("q"), *get_double("g"));
    sc.solenoid =
        SolenoidConfig(*get_double("R"), *get_double("Phi_e"), *get_double("Phi_m"));
    if (const auto s = get_int("seed")) {
        if (*s < 0) throw Error("seed must be non-negative");
        sc.seed = static_cast<unsigned long>(*s);
    }

    if (values.count("path")) sc.path_file = values["path"].first;
    if (values.count("trajectory")) sc.trajectory_file = values["trajectory"].first;

    sc.ring_b = get_double("ring_b");
    sc.ring_mass = get_double("ring_mass").value_or(sc.ring_mass);
    sc.ring_n_grid = static_cast<int>(get_int("ring_n_grid").value_or(sc.ring_n_grid));
    sc.ring_n_levels = static_cast<int>(get_int("ring_n_levels").value_or(sc.ring_n_levels));
    sc.sweep_min = get_double("sweep_min");
    sc.sweep_max = get_double("sweep_max");
    sc.sweep_steps = static_cast<int>(get_int("sweep_steps").value_or(sc.sweep_steps));

    sc.fringe_l = get_double("fringe_l").value_or(sc.fringe_l);
    sc.fringe_d = get_double("fringe_d").value_or(sc.fringe_d);
    sc.source_distance = get_double("source_distance").value_or(sc.source_distance);
    sc.axis_offset = get_double("axis_offset").value_or(sc.axis_offset);
    sc.slit_width = get_double("slit_width").value_or(sc.slit_width);
    sc.lambda_bar = get_double("lambda_bar").value_or(sc.lambda_bar);
    sc.delta_override = get_double("delta");
    sc.n_samples = static_cast<int>(get_int("n_samples").value_or(sc.n_samples));

    sc.oracle_rho_max_factor =
        get_double("oracle_rho_max").value_or(sc.oracle_rho_max_factor * sc.solenoid.radius) /
        sc.solenoid.radius;
    sc.oracle_n_points = static_cast<int>(get_int("oracle_n_points").value_or(sc.oracle_n_points));
    sc.oracle_sigma = get_double("oracle_sigma");
    return sc;
}

}  // namespace dyonlab
