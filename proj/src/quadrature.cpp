#include "qst/quadrature.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "qst/errors.hpp"

namespace qst::quad {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix, weights
// mu0 times the squared first components of the eigenvectors.
Rule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag, double mu0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
    eig.computeFromTridiagonal(diag, offdiag, Eigen::ComputeEigenvectors);
    if (eig.info() != Eigen::Success) throw NumericalError("Golub-Welsch eigensolve failed");
    Rule r;
    const auto n = diag.size();
    r.nodes.resize(n);
    r.weights.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        r.nodes[i] = eig.eigenvalues()(i);
        const double v0 = eig.eigenvectors()(0, i);
        r.weights[i] = mu0 * v0 * v0;
    }
    return r;
}

}  // namespace

Rule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw ValidationError("quadrature needs at least one node");
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd off(std::max(n - 1, 0));
    for (int k = 1; k < n; ++k) off(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
    Rule r = golub_welsch(diag, off, 2.0);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r.nodes[i] = mid + half * r.nodes[i];
        r.weights[i] *= half;
    }
    return r;
}

Rule gauss_hermite(int n) {
    if (n < 1) throw ValidationError("quadrature needs at least one node");
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd off(std::max(n - 1, 0));
    for (int k = 1; k < n; ++k) off(k - 1) = std::sqrt(0.5 * k);
    return golub_welsch(diag, off, std::sqrt(std::numbers::pi));
}

Rule periodic_trapezoid(int n) {
    if (n < 1) throw ValidationError("quadrature needs at least one node");
    Rule r;
    const double h = 2.0 * std::numbers::pi / n;
    for (int i = 0; i < n; ++i) {
        r.nodes.push_back(i * h);
        r.weights.push_back(h);
    }
    return r;
}

}  // namespace qst::quad
