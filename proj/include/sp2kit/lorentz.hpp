#pragma once

// Four-vector realization of Sp(2) as the (2+1)-dimensional Lorentz group
// acting on (t, x, z), with y carried along untouched. Coordinates are
// ordered (t, x, y, z) and c = 1.
//
// A four-vector v is identified with the symmetric matrix
//     V = [[t + z, x], [x, t - z]],
// and m in Sp(2) acts as V -> m V m^T. Under this map squeeze_s(eta) is the
// z-boost, boost_b(2 lambda) the x-boost and rotation(theta) the x-z rotation.

#include <cmath>
#include <variant>

#include <Eigen/Dense>

#include "sp2kit/sp2.hpp"
#include "sp2kit/wigner.hpp"

namespace sp2kit {

template <typename Scalar = double>
using FourVector = Eigen::Matrix<Scalar, 4, 1>;

template <typename Scalar = double>
using Mat4 = Eigen::Matrix<Scalar, 4, 4>;

namespace axis {
inline constexpr Eigen::Index t = 0;
inline constexpr Eigen::Index x = 1;
inline constexpr Eigen::Index y = 2;
inline constexpr Eigen::Index z = 3;
} // namespace axis

template <typename Scalar>
FourVector<Scalar> four_vector(Scalar t, Scalar x, Scalar y, Scalar z) {
    FourVector<Scalar> v;
    v << t, x, y, z;
    return v;
}

/// t^2 - x^2 - y^2 - z^2
template <typename Scalar>
Scalar minkowski_norm(const FourVector<Scalar>& v) {
    return v(0) * v(0) - v(1) * v(1) - v(2) * v(2) - v(3) * v(3);
}

template <typename Scalar>
Mat4<Scalar> minkowski_metric() {
    return FourVector<Scalar>(1, -1, -1, -1).asDiagonal();
}

/// Boost along z mixing (t, z).
template <typename Scalar>
Mat4<Scalar> four_boost_z(Scalar eta) {
    detail::require_finite(eta, "boost rapidity");
    const Scalar ch = std::cosh(eta);
    const Scalar sh = std::sinh(eta);
    if (!std::isfinite(ch)) {
        throw Overflow("boost rapidity overflows the floating-point range");
    }
    Mat4<Scalar> m = Mat4<Scalar>::Identity();
    m(0, 0) = ch;
    m(0, 3) = sh;
    m(3, 0) = sh;
    m(3, 3) = ch;
    return m;
}

/// Rotation in the x-z plane (about y); the rest-frame little group.
/// Full angle, so phi = pi/2 sends x to -z.
template <typename Scalar>
Mat4<Scalar> four_rotation_z(Scalar phi) {
    detail::require_finite(phi, "rotation angle");
    const Scalar c = std::cos(phi);
    const Scalar s = std::sin(phi);
    Mat4<Scalar> m = Mat4<Scalar>::Identity();
    m(1, 1) = c;
    m(1, 3) = s;
    m(3, 1) = -s;
    m(3, 3) = c;
    return m;
}

/// Same x-z rotation, under the name used for the rotation factors of the
/// rotation-boost-rotation decomposition.
template <typename Scalar>
Mat4<Scalar> four_rotation_y(Scalar theta) {
    return four_rotation_z(theta);
}

/// Boost along x mixing (t, x).
template <typename Scalar>
Mat4<Scalar> four_boost_x(Scalar chi) {
    detail::require_finite(chi, "boost rapidity");
    const Scalar ch = std::cosh(chi);
    const Scalar sh = std::sinh(chi);
    if (!std::isfinite(ch)) {
        throw Overflow("boost rapidity overflows the floating-point range");
    }
    Mat4<Scalar> m = Mat4<Scalar>::Identity();
    m(0, 0) = ch;
    m(0, 1) = sh;
    m(1, 0) = sh;
    m(1, 1) = ch;
    return m;
}

/// x-boost with rapidity 2 lambda, the image of boost_b(2 lambda).
template <typename Scalar>
Mat4<Scalar> four_b(Scalar two_lambda) {
    return four_boost_x(two_lambda);
}

/// Light-like little-group element; fixes (k, 0, 0, k). Equal to
/// lorentz4_of([[1, -gamma], [0, 1]]). The z-row x-entry is -gamma; with
/// +gamma the matrix would not preserve the metric.
template <typename Scalar>
Mat4<Scalar> four_n(Scalar gamma) {
    detail::require_finite(gamma, "shear parameter");
    const Scalar h = gamma * gamma / 2;
    Mat4<Scalar> m;
    m << 1 + h, -gamma, 0, -h,
         -gamma, 1, 0, gamma,
         0, 0, 1, 0,
         h, -gamma, 0, 1 - h;
    return m;
}

/// v' from V' = m V m^T; Minkowski norm is det V and so is preserved.
template <typename Scalar>
FourVector<Scalar> adjoint_action(const Sp2Matrix<Scalar>& m, const FourVector<Scalar>& v) {
    Matrix2<Scalar> vm;
    vm << v(0) + v(3), v(1), v(1), v(0) - v(3);
    const Matrix2<Scalar> w = m.matrix() * vm * m.matrix().transpose();
    return four_vector<Scalar>((w(0, 0) + w(1, 1)) / 2,
                               (w(0, 1) + w(1, 0)) / 2,
                               v(2),
                               (w(0, 0) - w(1, 1)) / 2);
}

/// The 4x4 Lorentz matrix of `m`; m and -m give the same result.
template <typename Scalar>
Mat4<Scalar> lorentz4_of(const Sp2Matrix<Scalar>& m) {
    Mat4<Scalar> out;
    for (Eigen::Index j = 0; j < 4; ++j) {
        out.col(j) = adjoint_action(m, FourVector<Scalar>(FourVector<Scalar>::Unit(j)));
    }
    return out;
}

/// S(-+eta) W S(+-eta): the plus sign for Elliptic, Hyperbolic(+) and lower
/// Parabolic; the minus sign for Hyperbolic(-) and upper Parabolic.
template <typename Scalar>
Sp2Matrix<Scalar> little_group_element(const WignerForm<Scalar>& w, Scalar eta) {
    const Sp2Matrix<Scalar> wm = wigner_matrix(w);
    const bool minus = (std::holds_alternative<Hyperbolic<Scalar>>(w) &&
                        std::get<Hyperbolic<Scalar>>(w).branch == Branch::minus) ||
                       (std::holds_alternative<Parabolic<Scalar>>(w) &&
                        std::get<Parabolic<Scalar>>(w).side == Side::upper);
    const Scalar e = minus ? eta : -eta;
    return squeeze_s(e) * wm * squeeze_s(-e);
}

/// A four-vector left invariant by little_group_element(w, eta):
/// the boosted rest vector (cosh eta, 0, 0, -sinh eta) for Elliptic, the
/// z-boosted unit space-like vector for Hyperbolic, and the light-like
/// (1, 0, 0, +-1) for Parabolic.
template <typename Scalar>
FourVector<Scalar> little_group_reference(const WignerForm<Scalar>& w, Scalar eta) {
    const Scalar ch = std::cosh(eta);
    const Scalar sh = std::sinh(eta);
    switch (w.index()) {
    case 0:
        return four_vector<Scalar>(ch, 0, 0, -sh);
    case 1:
        if (std::get<Hyperbolic<Scalar>>(w).branch == Branch::plus) {
            return four_vector<Scalar>(-sh, 0, 0, ch);
        }
        return four_vector<Scalar>(sh, 0, 0, ch);
    default:
        if (std::get<Parabolic<Scalar>>(w).side == Side::upper) {
            return four_vector<Scalar>(1, 0, 0, 1);
        }
        return four_vector<Scalar>(1, 0, 0, -1);
    }
}

} // namespace sp2kit
