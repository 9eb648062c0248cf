#pragma once

// Conjugacy classification and the Wigner normal form
//
//     M = sigma * G * W * G^{-1},   G = L(delta) * S(-+eta),
//
// where W is a rotation, a symmetric boost or a unit triangular matrix,
// and sigma = +-1 is the central sign. W^n is available in closed form,
// which gives constant-cost powers of M.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <type_traits>
#include <variant>

#include "sp2kit/sp2.hpp"

namespace sp2kit {

enum class Conjugacy { elliptic, hyperbolic, parabolic };
enum class Side { lower, upper };

inline const char* to_string(Conjugacy c) {
    switch (c) {
    case Conjugacy::elliptic: return "elliptic";
    case Conjugacy::hyperbolic: return "hyperbolic";
    case Conjugacy::parabolic: return "parabolic";
    }
    return "?";
}

inline const char* to_string(Branch b) { return b == Branch::plus ? "+" : "-"; }
inline const char* to_string(Side s) { return s == Side::lower ? "lower" : "upper"; }

/// R(phi), half-angle entries. phi != 0, |phi| < 2 pi.
template <typename Scalar = double>
struct Elliptic {
    Scalar phi;
};

/// X_+-(chi) = [[cosh(chi/2), +-sinh(chi/2)], [+-sinh(chi/2), cosh(chi/2)]], chi > 0.
/// The branch is data: X_- is a reflection of X_+, not X_+ at negative chi.
template <typename Scalar = double>
struct Hyperbolic {
    Scalar chi;
    Branch branch = Branch::plus;
};

/// N_+(gamma) = [[1, 0], [gamma, 1]] (lower) or N_-(gamma) = [[1, -gamma], [0, 1]] (upper).
template <typename Scalar = double>
struct Parabolic {
    Scalar gamma;
    Side side = Side::lower;
};

template <typename Scalar = double>
using WignerForm = std::variant<Elliptic<Scalar>, Hyperbolic<Scalar>, Parabolic<Scalar>>;

template <typename Scalar>
Conjugacy conjugacy_of(const WignerForm<Scalar>& w) {
    switch (w.index()) {
    case 0: return Conjugacy::elliptic;
    case 1: return Conjugacy::hyperbolic;
    default: return Conjugacy::parabolic;
    }
}

/// Throws InvalidArgument when `w` breaks its type invariant.
template <typename Scalar>
void validate(const WignerForm<Scalar>& w) {
    const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
    std::visit(
        [&](const auto& f) {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Elliptic<Scalar>>) {
                if (!std::isfinite(f.phi) || f.phi == 0 || std::abs(f.phi) >= two_pi) {
                    throw InvalidArgument("elliptic angle must satisfy 0 < |phi| < 2 pi");
                }
            } else if constexpr (std::is_same_v<F, Hyperbolic<Scalar>>) {
                if (!std::isfinite(f.chi) || !(f.chi > 0)) {
                    throw InvalidArgument("hyperbolic rapidity must be positive and finite");
                }
            } else {
                if (!std::isfinite(f.gamma)) {
                    throw InvalidArgument("parabolic shear must be finite");
                }
            }
        },
        w);
}

namespace detail {

// Matrix of a form with any parameter value (powers step outside the
// validated ranges, e.g. Elliptic(n * phi)).
template <typename Scalar>
Matrix2<Scalar> wigner_entries(const WignerForm<Scalar>& w) {
    Matrix2<Scalar> m;
    std::visit(
        [&](const auto& f) {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Elliptic<Scalar>>) {
                const Scalar c = std::cos(f.phi / 2);
                const Scalar s = std::sin(f.phi / 2);
                m << c, -s, s, c;
            } else if constexpr (std::is_same_v<F, Hyperbolic<Scalar>>) {
                const Scalar ch = std::cosh(f.chi / 2);
                const Scalar sh = f.branch == Branch::plus ? std::sinh(f.chi / 2) : -std::sinh(f.chi / 2);
                m << ch, sh, sh, ch;
            } else if (f.side == Side::lower) {
                m << 1, 0, f.gamma, 1;
            } else {
                m << 1, -f.gamma, 0, 1;
            }
        },
        w);
    return m;
}

template <typename Scalar>
WignerForm<Scalar> scaled(const WignerForm<Scalar>& w, Scalar n) {
    return std::visit(
        [&](auto f) -> WignerForm<Scalar> {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Elliptic<Scalar>>) {
                f.phi *= n;
            } else if constexpr (std::is_same_v<F, Hyperbolic<Scalar>>) {
                f.chi *= n;
            } else {
                f.gamma *= n;
            }
            return f;
        },
        w);
}

} // namespace detail

template <typename Scalar>
Sp2Matrix<Scalar> wigner_matrix(const WignerForm<Scalar>& w) {
    validate(w);
    const Matrix2<Scalar> m = detail::wigner_entries(w);
    if (!m.allFinite()) {
        throw Overflow("Wigner matrix overflows the floating-point range");
    }
    return Sp2Matrix<Scalar>::trusted(m);
}

// -- classification and eigenvalues ------------------------------------------

/// Class of a half-trace t: |t| < 1 - eps elliptic, |t| > 1 + eps hyperbolic,
/// otherwise parabolic.
template <typename Scalar>
Conjugacy classify_half_trace(Scalar t, Scalar eps) {
    const Scalar a = std::abs(t);
    if (a < 1 - eps) {
        return Conjugacy::elliptic;
    }
    if (a > 1 + eps) {
        return Conjugacy::hyperbolic;
    }
    return Conjugacy::parabolic;
}

template <typename Scalar>
Conjugacy classify(const Sp2Matrix<Scalar>& m, const Tolerances<Scalar>& tol = {}) {
    return classify_half_trace(m.half_trace(), tol.parabolic);
}

enum class EigenKind { real, unit_complex, degenerate };

inline const char* to_string(EigenKind k) {
    switch (k) {
    case EigenKind::real: return "real";
    case EigenKind::unit_complex: return "unit-complex";
    case EigenKind::degenerate: return "degenerate";
    }
    return "?";
}

/// Eigenvalues with e_plus * e_minus = 1. For real pairs e_plus is the one
/// of larger magnitude.
template <typename Scalar = double>
struct EigenPair {
    EigenKind kind;
    std::complex<Scalar> e_plus;
    std::complex<Scalar> e_minus;
};

template <typename Scalar>
EigenPair<Scalar> eigenvalues(const Sp2Matrix<Scalar>& m, const Tolerances<Scalar>& tol = {}) {
    using C = std::complex<Scalar>;
    const Scalar t = m.half_trace();
    const Scalar a = std::abs(t);
    switch (classify_half_trace(t, tol.parabolic)) {
    case Conjugacy::elliptic: {
        const Scalar im = std::sqrt((1 - a) * (1 + a));
        return {EigenKind::unit_complex, C(t, im), C(t, -im)};
    }
    case Conjugacy::hyperbolic: {
        const Scalar big = t + std::copysign(std::sqrt((a - 1) * (a + 1)), t);
        return {EigenKind::real, C(big), C(1 / big)};
    }
    case Conjugacy::parabolic:
        break;
    }
    const Scalar one = std::copysign(Scalar(1), t);
    return {EigenKind::degenerate, C(one), C(one)};
}

// -- normal form --------------------------------------------------------------

/// m = sigma * G * W(form) * G^{-1} with G = L(delta) * S(-eta) for the
/// plus parity and G = L(delta) * S(+eta) for the minus parity.
template <typename Scalar = double>
struct NormalForm {
    Sp2Matrix<Scalar> G;
    WignerForm<Scalar> form{Parabolic<Scalar>{0, Side::lower}};
    Scalar eta{0};
    int sigma{1};
    Branch parity{Branch::plus};   ///< parity of the equal-diagonal core
    Scalar delta{0};               ///< angle of the outer rotation L
    bool near_boundary{false};     ///< ||t| - 1| below the conditioning tolerance

    Conjugacy conjugacy() const { return conjugacy_of(form); }
};

/// Normal form of `m`.
///
/// The central sign is pulled out so sigma * m has non-negative half-trace.
/// Conjugating by L(delta) leaves the equal-diagonal core
///
///     K = [[p, u - q], [u + q, p]],   p = cosh(l) cos(t), q = cosh(l) sin(t), u = +-sinh(l),
///
/// where the sign of u (the core parity) is chosen so that delta lies in
/// [-pi/2, pi/2]. Elliptic and hyperbolic cores give exp(2 eta) from the
/// ratio of the off-diagonal entries; a parabolic core fixes eta = 0 and
/// takes gamma from its non-vanishing off-diagonal entry.
template <typename Scalar>
NormalForm<Scalar> normal_form(const Sp2Matrix<Scalar>& m, const Tolerances<Scalar>& tol = {}) {
    NormalForm<Scalar> nf;
    nf.sigma = m.half_trace() < 0 ? -1 : 1;
    const Sp2Matrix<Scalar> ms = nf.sigma < 0 ? -m : m;

    const Scalar p = ms.half_trace();
    const Scalar q = (ms.c() - ms.b()) / 2;
    const Scalar r = (ms.b() + ms.c()) / 2;
    const Scalar s = (ms.d() - ms.a()) / 2;

    nf.parity = r < 0 ? Branch::minus : Branch::plus;
    const Scalar sgn = nf.parity == Branch::plus ? Scalar(1) : Scalar(-1);
    const Scalar u = sgn * std::hypot(r, s);
    nf.delta = u == 0 ? Scalar(0) : std::atan2(sgn * s, sgn * r);

    const Scalar k12 = u - q;
    const Scalar k21 = u + q;
    nf.near_boundary = std::abs(p - 1) < tol.conditioning;

    switch (classify_half_trace(p, tol.parabolic)) {
    case Conjugacy::elliptic: {
        const Scalar sin_half = std::copysign(std::sqrt(std::max(Scalar(0), -k12 * k21)), k21);
        nf.form = Elliptic<Scalar>{2 * std::atan2(sin_half, p)};
        nf.eta = sgn * (std::log(std::abs(k21)) - std::log(std::abs(k12))) / 2;
        break;
    }
    case Conjugacy::hyperbolic: {
        const Scalar sinh_half = std::sqrt(std::max(Scalar(0), k12 * k21));
        nf.form = Hyperbolic<Scalar>{2 * std::asinh(sinh_half), nf.parity};
        nf.eta = sgn * (std::log(std::abs(k21)) - std::log(std::abs(k12))) / 2;
        break;
    }
    case Conjugacy::parabolic:
        if (std::abs(k12) <= std::abs(k21)) {
            nf.form = Parabolic<Scalar>{k21, Side::lower};
        } else {
            nf.form = Parabolic<Scalar>{-k12, Side::upper};
        }
        nf.eta = 0;
        break;
    }

    nf.G = rotation(nf.delta) * squeeze_s(-sgn * nf.eta);
    return nf;
}

template <typename Scalar>
Sp2Matrix<Scalar> reconstruct(const NormalForm<Scalar>& nf) {
    const Sp2Matrix<Scalar> r = nf.G * wigner_matrix(nf.form) * nf.G.inverse();
    return nf.sigma < 0 ? -r : r;
}

/// M^n = sigma^n * G * W^n * G^{-1}; W^n scales the form parameter by n.
template <typename Scalar>
Sp2Matrix<Scalar> power(const NormalForm<Scalar>& nf, std::uint64_t n) {
    const Matrix2<Scalar> wn = detail::wigner_entries(detail::scaled(nf.form, static_cast<Scalar>(n)));
    Matrix2<Scalar> r = nf.G.matrix() * wn * nf.G.inverse().matrix();
    if (nf.sigma < 0 && (n & 1u)) {
        r = -r;
    }
    if (!r.allFinite()) {
        throw Overflow("matrix power overflows the floating-point range");
    }
    return Sp2Matrix<Scalar>::trusted(r);
}

/// m^n by binary exponentiation, independent of the normal form.
/// Determinant drift is renormalized every 32 squarings.
template <typename Scalar>
Sp2Matrix<Scalar> power_oracle(const Sp2Matrix<Scalar>& m, std::uint64_t n) {
    const auto renormalize = [](Matrix2<Scalar>& x) {
        const Scalar d = x.determinant();
        if (std::abs(d - 1) > Scalar(1e-12) && d > 0) {
            x /= std::sqrt(d);
        }
    };
    Matrix2<Scalar> result = Matrix2<Scalar>::Identity();
    Matrix2<Scalar> base = m.matrix();
    unsigned squarings = 0;
    while (n != 0) {
        if (n & 1u) {
            result = (result * base).eval();
        }
        n >>= 1;
        if (n != 0) {
            base = (base * base).eval();
            if (++squarings % 32 == 0) {
                renormalize(base);
                renormalize(result);
            }
        }
    }
    if (!result.allFinite()) {
        throw Overflow("matrix power overflows the floating-point range");
    }
    return Sp2Matrix<Scalar>::trusted(result);
}

// -- complex (SU(1,1)) form ---------------------------------------------------

template <typename Scalar>
using ComplexMatrix2 = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

/// C m C^{-1} with C = (1/sqrt 2) [[1, i], [i, 1]]. Rotations become
/// diagonal phase matrices; the symmetric boost is unchanged.
template <typename Scalar>
ComplexMatrix2<Scalar> to_complex_form(const Sp2Matrix<Scalar>& m) {
    using C = std::complex<Scalar>;
    const Scalar h = 1 / std::sqrt(Scalar(2));
    ComplexMatrix2<Scalar> c;
    ComplexMatrix2<Scalar> c_inv;
    c << C(h, 0), C(0, h), C(0, h), C(h, 0);
    c_inv << C(h, 0), C(0, -h), C(0, -h), C(h, 0);
    return c * m.matrix().template cast<C>() * c_inv;
}

} // namespace sp2kit
