#pragma once

// Piecewise-linear sampled paths, path-file parsing, and winding numbers
// around the solenoid axis.

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace dyonlab {

// A polyline in 3-space.  For closed paths the segment joining the last
// stored vertex back to the first is implicit; a trailing vertex that
// coincides with the first (within the closure tolerance, default
// 1e-9 x diameter) is dropped at construction so it is not walked twice.
struct SampledPath {
    std::vector<Position> points;
    bool closed = false;

    std::size_t segment_count() const {
        return closed ? points.size() : points.size() - 1;
    }

    std::pair<Position, Position> segment(std::size_t i) const {
        const std::size_t j = (i + 1 == points.size()) ? (closed ? 0 : i + 1) : i + 1;
        return {points[i], points[j]};
    }

    double diameter() const {
        double d = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                d = std::max(d, (points[i] - points[j]).norm());
        return d;
    }
};

inline SampledPath make_path(std::vector<Position> points, bool closed,
                             double closure_tolerance = -1.0) {
    for (const Position& p : points)
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
            throw ParameterError("path vertices must be finite");
    SampledPath path{std::move(points), closed};
    if (closed) {
        if (path.points.size() >= 2) {
            const double tol =
                closure_tolerance >= 0.0 ? closure_tolerance : 1e-9 * path.diameter();
            if ((path.points.front() - path.points.back()).norm() <= tol)
                path.points.pop_back();
        }
        if (path.points.size() < 3)
            throw ParameterError("closed path needs at least 3 distinct vertices");
    } else if (path.points.size() < 2) {
        throw ParameterError("open path needs at least 2 vertices");
    }
    return path;
}

// Path files: one `x y z` triple per line, a bare `#closed` line marks the
// path closed, any other `#` starts a comment.
inline SampledPath parse_path(std::istream& in) {
    std::vector<Position> points;
    bool closed = false;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            std::istringstream directive(line.substr(hash + 1));
            std::string word;
            directive >> word;
            if (word == "closed") {
                std::string rest;
                if (directive >> rest)
                    throw ParseError("trailing text after #closed directive", line_number);
                closed = true;
                line.erase(hash);
            } else {
                line.erase(hash);
            }
        }
        std::istringstream fields(line);
        Position p;
        if (!(fields >> p.x)) {
            std::string stray;
            std::istringstream recheck(line);
            if (recheck >> stray)
                throw ParseError("expected three coordinates, got '" + stray + "'",
                                 line_number);
            continue;  // blank or comment-only line
        }
        if (!(fields >> p.y >> p.z))
            throw ParseError("expected three coordinates", line_number);
        std::string extra;
        if (fields >> extra)
            throw ParseError("trailing text '" + extra + "' after coordinates", line_number);
        points.push_back(p);
    }
    return make_path(std::move(points), closed);
}

// Shortest distance from the z axis to the segment p0 -> p1, taken over the
// continuous segment rather than its endpoints (a chord can dip far inside
// the cylinder that contains both endpoints).
inline double segment_min_axis_distance(const Position& p0, const Position& p1) {
    const double dx = p1.x - p0.x;
    const double dy = p1.y - p0.y;
    const double dd = dx * dx + dy * dy;
    double t = 0.0;
    if (dd > 0.0) t = std::clamp(-(p0.x * dx + p0.y * dy) / dd, 0.0, 1.0);
    return std::hypot(p0.x + t * dx, p0.y + t * dy);
}

// Signed number of turns a closed path makes around the z axis: the sum of
// per-segment principal azimuth increments, which telescopes to a multiple
// of 2 pi for any closed polyline off the axis.
inline int winding_number(const SampledPath& path) {
    if (!path.closed)
        throw ParameterError("winding number requires a closed path");
    double total = 0.0;
    for (std::size_t i = 0; i < path.segment_count(); ++i) {
        const auto [a, b] = path.segment(i);
        if (a.rho() == 0.0 || b.rho() == 0.0)
            throw AxisError("winding number undefined for a path touching the axis");
        // Principal increment in (-pi, pi] from the 2-D cross and dot products.
        const double cross = a.x * b.y - a.y * b.x;
        const double dot = a.x * b.x + a.y * b.y;
        const double dphi = std::atan2(cross, dot);
        if (std::abs(dphi) >= pi - 1e-9)
            throw UndersampledPathError(
                "azimuth step at segment " + std::to_string(i) +
                " is within 1e-9 of pi; refine the sampling");
        total += dphi;
    }
    const double turns = total / two_pi;
    const long long n = std::llround(turns);
    if (std::abs(turns - static_cast<double>(n)) >= 1e-6)
        throw UndersampledPathError("winding sum is " + std::to_string(turns) +
                                    " turns, not an integer; refine the sampling");
    return static_cast<int>(n);
}

}  // namespace dyonlab
