#pragma once

// Central finite-difference operators on scalar and vector fields.  These
// exist so that differential identities (curl of a potential, gradient of a
// gauge function, divergence-free checks) are verified against evaluations
// that cannot share algebra with the closed forms under test.

#include <array>

#include "core.hpp"

namespace dyonlab {

namespace detail {
inline constexpr std::array<Vec3, 3> axes{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
}

// d/dx_i of a scalar field, second-order central difference.
template <class ScalarField>
Vec3 central_gradient(ScalarField&& f, const Position& p, double h) {
    Vec3 grad;
    double* out[3] = {&grad.x, &grad.y, &grad.z};
    for (int i = 0; i < 3; ++i) {
        const Vec3 dp = detail::axes[i] * h;
        *out[i] = (f(p + dp) - f(p - dp)) / (2.0 * h);
    }
    return grad;
}

// Central-difference Jacobian column d(F)/d(x_i).
template <class VectorField>
Vec3 central_partial(VectorField&& F, const Position& p, int axis, double h) {
    const Vec3 dp = detail::axes[axis] * h;
    return (F(p + dp) - F(p - dp)) / (2.0 * h);
}

template <class VectorField>
Vec3 central_curl(VectorField&& F, const Position& p, double h) {
    const Vec3 dFdx = central_partial(F, p, 0, h);
    const Vec3 dFdy = central_partial(F, p, 1, h);
    const Vec3 dFdz = central_partial(F, p, 2, h);
    return {dFdy.z - dFdz.y, dFdz.x - dFdx.z, dFdx.y - dFdy.x};
}

template <class VectorField>
double central_divergence(VectorField&& F, const Position& p, double h) {
    return central_partial(F, p, 0, h).x + central_partial(F, p, 1, h).y +
           central_partial(F, p, 2, h).z;
}

}  // namespace dyonlab
