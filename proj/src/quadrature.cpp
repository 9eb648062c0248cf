#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "sp2kit/errors.hpp"
#include "sp2kit/oscillator.hpp"

namespace sp2kit::oscillator {

GaussHermite compute_gauss_hermite(int n) {
    if (n < 1) {
        throw InvalidArgument("Gauss-Hermite rule needs at least one node");
    }
    // Jacobi matrix of the orthonormal Hermite recurrence: off-diagonal sqrt(k/2).
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double b = std::sqrt(k / 2.0);
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
    GaussHermite rule;
    rule.nodes = solver.eigenvalues();
    // Christoffel weights 1 / sum_k h_k(x)^2 keep full relative accuracy in
    // the tails, where squared eigenvector components do not.
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        const double x = rule.nodes(i);
        double prev = 0.0;
        double cur = std::pow(std::numbers::pi, -0.25);
        double sum = cur * cur;
        for (int k = 0; k + 1 < n; ++k) {
            const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(double(k) / (k + 1)) * prev;
            prev = cur;
            cur = next;
            sum += cur * cur;
        }
        rule.weights(i) = 1.0 / sum;
    }
    return rule;
}

const GaussHermite& gauss_hermite(int n) {
    // function-local statics: initialization is thread-safe
    if (n == 64) {
        static const GaussHermite rule64 = compute_gauss_hermite(64);
        return rule64;
    }
    if (n == 128) {
        static const GaussHermite rule128 = compute_gauss_hermite(128);
        return rule128;
    }
    thread_local GaussHermite scratch;
    scratch = compute_gauss_hermite(n);
    return scratch;
}

} // namespace sp2kit::oscillator
