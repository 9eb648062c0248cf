#pragma once

// Real 2x2 unimodular (Sp(2) / ABCD) matrices, their one-parameter
// subgroups, and the rotation-boost-rotation (Bargmann) factorization.
//
// Angles follow the half-angle convention: rotation(theta) has entries
// cos(theta/2), sin(theta/2), so the 2x2 group covers the (2+1)-dimensional
// Lorentz group twice.

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "sp2kit/errors.hpp"

namespace sp2kit {

template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

template <typename Scalar = double>
struct Tolerances {
    Scalar det = Scalar(1e-10);          ///< |det - 1| accepted by constructors
    Scalar parabolic = Scalar(1e-9);     ///< ||t| - 1| at or below this is parabolic
    Scalar conditioning = Scalar(1e-6);  ///< ||t| - 1| below this flags a normal form
};

enum class Branch { plus, minus };

namespace detail {

template <typename Scalar>
void require_finite(Scalar v, const char* what) {
    if (!std::isfinite(v)) {
        throw InvalidArgument(std::string(what) + " must be finite");
    }
}

template <typename Scalar>
Scalar checked_exp(Scalar v, const char* what) {
    const Scalar e = std::exp(v);
    if (!std::isfinite(e)) {
        throw Overflow(std::string(what) + " overflows the floating-point range");
    }
    return e;
}

template <typename Scalar>
Scalar wrap_angle(Scalar a) {
    // principal range (-pi, pi]
    const Scalar pi = std::numbers::pi_v<Scalar>;
    a = std::remainder(a, 2 * pi);
    if (a <= -pi) {
        a += 2 * pi;
    }
    return a;
}

} // namespace detail

/// A 2x2 real matrix with unit determinant.
///
/// Construction through `Sp2Matrix(m, tol)` validates finiteness and
/// |det - 1| <= tol. Products of valid matrices are trusted and not
/// re-validated, so long chains can accumulate rounding drift in the
/// determinant; power_oracle() renormalizes for that reason.
template <typename Scalar = double>
class Sp2Matrix {
public:
    using scalar_type = Scalar;
    using matrix_type = Matrix2<Scalar>;

    Sp2Matrix() : m_(matrix_type::Identity()) {}

    explicit Sp2Matrix(const matrix_type& m, Scalar tol = Tolerances<Scalar>{}.det) : m_(m) {
        if (!m_.allFinite()) {
            throw InvalidMatrix("matrix entries must be finite");
        }
        const Scalar d = m_.determinant();
        if (!(std::abs(d - 1) <= tol)) {
            std::ostringstream os;
            os << "determinant " << d << " differs from 1 by more than " << tol;
            throw InvalidMatrix(os.str());
        }
    }

    Sp2Matrix(Scalar a, Scalar b, Scalar c, Scalar d, Scalar tol = Tolerances<Scalar>{}.det)
        : Sp2Matrix(make(a, b, c, d), tol) {}

    static Sp2Matrix identity() { return Sp2Matrix(); }

    /// Wraps `m` without validation. Callers guarantee the invariant.
    static Sp2Matrix trusted(const matrix_type& m) {
        Sp2Matrix r;
        r.m_ = m;
        return r;
    }

    const matrix_type& matrix() const { return m_; }
    Scalar operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

    Scalar a() const { return m_(0, 0); }
    Scalar b() const { return m_(0, 1); }
    Scalar c() const { return m_(1, 0); }
    Scalar d() const { return m_(1, 1); }

    Scalar determinant() const { return m_.determinant(); }
    Scalar half_trace() const { return (m_(0, 0) + m_(1, 1)) / 2; }

    /// Inverse via the adjugate, exact for unit determinant.
    Sp2Matrix inverse() const {
        matrix_type inv;
        inv << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
        return trusted(inv);
    }

    Sp2Matrix operator-() const { return trusted(-m_); }

    friend Sp2Matrix operator*(const Sp2Matrix& x, const Sp2Matrix& y) {
        return trusted(x.m_ * y.m_);
    }
    Sp2Matrix& operator*=(const Sp2Matrix& y) {
        m_ = m_ * y.m_;
        return *this;
    }

    friend bool operator==(const Sp2Matrix& x, const Sp2Matrix& y) { return x.m_ == y.m_; }

private:
    static matrix_type make(Scalar a, Scalar b, Scalar c, Scalar d) {
        matrix_type m;
        m << a, b, c, d;
        return m;
    }

    matrix_type m_;
};

using Mat2 = Sp2Matrix<double>;

template <typename Scalar>
Scalar max_abs_diff(const Sp2Matrix<Scalar>& x, const Sp2Matrix<Scalar>& y) {
    return (x.matrix() - y.matrix()).cwiseAbs().maxCoeff();
}

// -- one-parameter subgroups --------------------------------------------------

/// [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]]
template <typename Scalar>
Sp2Matrix<Scalar> rotation(Scalar theta) {
    detail::require_finite(theta, "rotation angle");
    const Scalar c = std::cos(theta / 2);
    const Scalar s = std::sin(theta / 2);
    Matrix2<Scalar> m;
    m << c, -s, s, c;
    return Sp2Matrix<Scalar>::trusted(m);
}

/// Symmetric boost B(2*lambda) with entries cosh(lambda), sinh(lambda).
template <typename Scalar>
Sp2Matrix<Scalar> boost_b(Scalar two_lambda) {
    detail::require_finite(two_lambda, "boost rapidity");
    const Scalar ch = std::cosh(two_lambda / 2);
    const Scalar sh = std::sinh(two_lambda / 2);
    if (!std::isfinite(ch)) {
        throw Overflow("boost rapidity overflows the floating-point range");
    }
    Matrix2<Scalar> m;
    m << ch, sh, sh, ch;
    return Sp2Matrix<Scalar>::trusted(m);
}

/// Diagonal squeeze diag(e^{eta/2}, e^{-eta/2}).
template <typename Scalar>
Sp2Matrix<Scalar> squeeze_s(Scalar eta) {
    detail::require_finite(eta, "squeeze parameter");
    const Scalar up = detail::checked_exp(eta / 2, "squeeze parameter");
    const Scalar down = detail::checked_exp(-eta / 2, "squeeze parameter");
    Matrix2<Scalar> m;
    m << up, 0, 0, down;
    return Sp2Matrix<Scalar>::trusted(m);
}

/// Equal-diagonal core R(theta) B(+-2 lambda) R(theta).
///
/// Entries: diagonal cosh(l) cos(t); upper-right -cosh(l) sin(t) +- sinh(l);
/// lower-left cosh(l) sin(t) +- sinh(l). The minus parity is a reflection,
/// not the plus form with lambda negated.
template <typename Scalar>
Sp2Matrix<Scalar> core_matrix(Scalar theta, Scalar lambda, Branch parity = Branch::plus) {
    detail::require_finite(theta, "core angle");
    detail::require_finite(lambda, "core boost");
    const Scalar ch = std::cosh(lambda);
    const Scalar sh = parity == Branch::plus ? std::sinh(lambda) : -std::sinh(lambda);
    if (!std::isfinite(ch)) {
        throw Overflow("core boost overflows the floating-point range");
    }
    const Scalar diag = ch * std::cos(theta);
    const Scalar cs = ch * std::sin(theta);
    Matrix2<Scalar> m;
    m << diag, -cs + sh, cs + sh, diag;
    return Sp2Matrix<Scalar>::trusted(m);
}

// -- Bargmann decomposition ---------------------------------------------------

/// Parameters of M = R(theta1) B(2 lambda) R(theta2).
template <typename Scalar = double>
struct BargmannParams {
    Scalar theta1{0};
    Scalar theta2{0};
    Scalar lambda{0};

    Scalar theta() const { return (theta1 + theta2) / 2; }
    Scalar delta() const { return (theta1 - theta2) / 2; }

    static BargmannParams from_core(Scalar theta, Scalar delta, Scalar lambda) {
        return {theta + delta, theta - delta, lambda};
    }
};

template <typename Scalar>
Sp2Matrix<Scalar> compose_bargmann(const BargmannParams<Scalar>& p) {
    return rotation(p.theta1) * boost_b(2 * p.lambda) * rotation(p.theta2);
}

/// cosh(2 lambda) read directly from the ABCD entries:
/// ((A + D)^2 + (C - B)^2) / 2 - 1.
template <typename Scalar>
Scalar cosh_two_lambda(const Sp2Matrix<Scalar>& m) {
    const Scalar s = m.a() + m.d();
    const Scalar t = m.c() - m.b();
    return (s * s + t * t) / 2 - 1;
}

/// Canonical Bargmann parameters: lambda >= 0, theta and delta in (-pi, pi].
///
/// Uses cosh(l) cos(t) = (A+D)/2, cosh(l) sin(t) = (C-B)/2,
/// sinh(l) cos(d) = (B+C)/2 and sinh(l) sin(d) = (D-A)/2, resolving
/// quadrants with atan2. lambda = 0 leaves delta undefined; it is set to 0.
template <typename Scalar>
BargmannParams<Scalar> decompose_bargmann(const Sp2Matrix<Scalar>& m) {
    const Scalar p = (m.a() + m.d()) / 2;
    const Scalar q = (m.c() - m.b()) / 2;
    const Scalar r = (m.b() + m.c()) / 2;
    const Scalar s = (m.d() - m.a()) / 2;

    const Scalar sinh_l = std::hypot(r, s);
    const Scalar lambda = std::asinh(sinh_l);
    const Scalar theta = detail::wrap_angle(std::atan2(q, p));
    const Scalar delta = sinh_l == 0 ? Scalar(0) : detail::wrap_angle(std::atan2(s, r));
    return BargmannParams<Scalar>::from_core(theta, delta, lambda);
}

} // namespace sp2kit
