#include "sp2kit/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sp2kit/errors.hpp"

namespace sp2kit::oscillator {

namespace {

const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw InvalidArgument(std::string(what) + " must be finite");
    }
}

void require_squeeze(double eta) {
    if (!std::isfinite(eta) || eta < 0) {
        throw InvalidArgument("squeeze parameter must be finite and non-negative");
    }
}

constexpr int max_oracle_order = 12;
constexpr double max_oracle_eta = 3.0;
constexpr int oracle_nodes = 64;
constexpr double oracle_agreement = 1e-10;

// The integrand of the overlap is a polynomial of degree j + k times a
// Gaussian that is separable in a = (x1 + x2)/sqrt2, b = (x1 - x2)/sqrt2.
// Rescaling a and b to unit Gaussian width leaves the rule exact once
// 2n - 1 >= j + k.
double overlap_with(const GaussHermite& rule, int j, int k, double eta) {
    const double alpha = std::sqrt(2.0 / (1.0 + std::exp(-eta)));
    const double beta = std::sqrt(2.0 / (1.0 + std::exp(eta)));
    const Eigen::Index n = rule.nodes.size();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double a = alpha * rule.nodes(i);
        for (Eigen::Index l = 0; l < n; ++l) {
            const double b = beta * rule.nodes(l);
            const double x1 = (a + b) / std::numbers::sqrt2;
            const double x2 = (a - b) / std::numbers::sqrt2;
            sum += rule.weights(i) * rule.weights(l) * normalized_hermite(j, x1) * normalized_hermite(k, x2);
        }
    }
    return alpha * beta * inv_sqrt_pi * sum;
}

double norm_with(const GaussHermite& rule, double eta) {
    // In a = e^{eta/2} y, b = e^{-eta/2} z the density psi_eta^2 is
    // exp(-y^2 - z^2)/pi with unit Jacobian; divide the weight back out.
    const double sa = std::exp(eta / 2);
    const double sb = std::exp(-eta / 2);
    const Eigen::Index n = rule.nodes.size();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double y = rule.nodes(i);
        for (Eigen::Index l = 0; l < n; ++l) {
            const double z = rule.nodes(l);
            const double a = sa * y;
            const double b = sb * z;
            const double psi = entangled_wavefunction(eta, (a + b) / std::numbers::sqrt2, (a - b) / std::numbers::sqrt2);
            sum += rule.weights(i) * rule.weights(l) * psi * psi * std::exp(y * y + z * z);
        }
    }
    return sum;
}

} // namespace

double ground_wavefunction(double x1, double x2) {
    return inv_sqrt_pi * std::exp(-(x1 * x1 + x2 * x2) / 2);
}

double entangled_wavefunction(double eta, double x1, double x2) {
    require_finite(eta, "squeeze parameter");
    const double sum = x1 + x2;
    const double diff = x1 - x2;
    return inv_sqrt_pi * std::exp(-(std::exp(-eta) * sum * sum + std::exp(eta) * diff * diff) / 4);
}

Eigen::Vector2d squeezed_coordinates(double eta, double x1, double x2) {
    Eigen::Matrix2d rotate;
    rotate << 1, -1, 1, 1;
    rotate /= std::numbers::sqrt2;
    const Eigen::Matrix2d squeeze = Eigen::Vector2d(std::exp(eta / 2), std::exp(-eta / 2)).asDiagonal();
    return squeeze * rotate * Eigen::Vector2d(x1, x2);
}

double normalized_hermite(int k, double x) {
    if (k < 0) {
        throw InvalidArgument("oscillator index must be non-negative");
    }
    double prev = 0.0;
    double cur = std::pow(std::numbers::pi, -0.25);
    for (int i = 0; i < k; ++i) {
        const double next = std::sqrt(2.0 / (i + 1)) * x * cur - std::sqrt(double(i) / (i + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double hermite_function(int k, double x) {
    return normalized_hermite(k, x) * std::exp(-x * x / 2);
}

double expansion_coefficient(int k, double eta) {
    if (k < 0) {
        throw InvalidArgument("expansion index must be non-negative");
    }
    require_squeeze(eta);
    return std::pow(std::tanh(eta / 2), k) / std::cosh(eta / 2);
}

std::vector<ExpansionCoefficient> expansion(double eta, int kmax) {
    if (kmax < 0) {
        throw InvalidArgument("kmax must be non-negative");
    }
    require_squeeze(eta);
    std::vector<ExpansionCoefficient> out;
    out.reserve(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        out.push_back({k, expansion_coefficient(k, eta)});
    }
    return out;
}

SqueezedState::SqueezedState(double eta) : eta_(eta) { require_squeeze(eta); }

double overlap_oracle(int j, int k, double eta) {
    if (j < 0 || k < 0 || j > max_oracle_order || k > max_oracle_order) {
        throw RangeError("overlap oracle is validated for 0 <= j, k <= 12");
    }
    if (!std::isfinite(eta) || eta < 0 || eta > max_oracle_eta) {
        throw RangeError("overlap oracle is validated for 0 <= eta <= 3");
    }
    const double coarse = overlap_with(gauss_hermite(oracle_nodes), j, k, eta);
    const double fine = overlap_with(gauss_hermite(2 * oracle_nodes), j, k, eta);
    if (std::abs(coarse - fine) > oracle_agreement) {
        throw std::runtime_error("overlap quadrature did not converge");
    }
    return fine;
}

double norm_oracle(double eta) {
    require_finite(eta, "squeeze parameter");
    return norm_with(gauss_hermite(oracle_nodes), eta);
}

} // namespace sp2kit::oscillator
