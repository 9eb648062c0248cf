#pragma once

// Two coupled oscillators: the squeezed ground state and its expansion
//
//     psi_eta(x1, x2) = sum_k c_k(eta) phi_k(x1) phi_k(x2),
//     c_k(eta) = tanh(eta/2)^k / cosh(eta/2).

#include <vector>

#include <Eigen/Dense>

namespace sp2kit::oscillator {

/// (1/sqrt(pi)) exp(-(x1^2 + x2^2)/2)
double ground_wavefunction(double x1, double x2);

/// (1/sqrt(pi)) exp(-(e^{-eta}(x1 + x2)^2 + e^{eta}(x1 - x2)^2)/4)
double entangled_wavefunction(double eta, double x1, double x2);

/// Coordinates in which psi_eta is the ground state: a 45 degree rotation
/// (1/sqrt 2)[[1, -1], [1, 1]] followed by the squeeze diag(e^{eta/2}, e^{-eta/2}).
Eigen::Vector2d squeezed_coordinates(double eta, double x1, double x2);

/// Normalized oscillator eigenfunction phi_k(x) = h_k(x) exp(-x^2/2).
double hermite_function(int k, double x);

/// h_k(x): the polynomial part of hermite_function, by the normalized
/// three-term recurrence.
double normalized_hermite(int k, double x);

/// c_k(eta); requires k >= 0 and eta >= 0.
double expansion_coefficient(int k, double eta);

struct ExpansionCoefficient {
    int k;
    double value;
};

/// c_0 .. c_kmax
std::vector<ExpansionCoefficient> expansion(double eta, int kmax);

/// A squeeze parameter with its wavefunction and expansion.
class SqueezedState {
public:
    explicit SqueezedState(double eta);

    double eta() const { return eta_; }
    double operator()(double x1, double x2) const { return entangled_wavefunction(eta_, x1, x2); }
    double coefficient(int k) const { return expansion_coefficient(k, eta_); }

private:
    double eta_;
};

/// Gauss-Hermite rule for the weight exp(-x^2).
struct GaussHermite {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

/// n-point rule by the Golub-Welsch eigenvalue method. Rules for 64 and
/// 128 points are cached; others are computed on each call.
const GaussHermite& gauss_hermite(int n);
GaussHermite compute_gauss_hermite(int n);

/// Integral of phi_j(x1) phi_k(x2) psi_eta(x1, x2) over the plane by tensor
/// Gauss-Hermite quadrature. Validated for 0 <= j, k <= 12 and 0 <= eta <= 3;
/// throws RangeError outside that range.
double overlap_oracle(int j, int k, double eta);

/// Integral of psi_eta^2 over the plane by the same quadrature.
double norm_oracle(double eta);

} // namespace sp2kit::oscillator
