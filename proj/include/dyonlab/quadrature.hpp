#pragma once

// Adaptive Simpson quadrature.  Each interval is accepted when the classic
// two-panel error estimate (S2 - S1)/15 falls below the locally allotted
// tolerance; otherwise the interval splits and the budget halves with it.

#include <cmath>
#include <utility>

#include "core.hpp"

namespace dyonlab {

namespace detail {

inline double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_simpson_rec(F&& f, double a, double fa, double b, double fb, double m,
                            double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Integrates f over [a, b] to absolute tolerance tol.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 48) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = detail::simpson(a, fa, b, fb, fm);
    return detail::adaptive_simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

// Line integral of a vector field along the straight segment p0 -> p1.
template <class VectorField>
double segment_line_integral(VectorField&& F, const Position& p0, const Position& p1,
                             double tol) {
    const Vec3 d = p1 - p0;
    return adaptive_simpson([&](double t) { return F(p0 + d * t).dot(d); }, 0.0, 1.0, tol);
}

}  // namespace dyonlab
