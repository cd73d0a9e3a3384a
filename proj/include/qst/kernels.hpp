#pragma once

// Gaussian nonlocal kernels
//   G_n(x_1..x_n) = c_n delta^4(sum_j x_j) exp(-w sum_j sum_mu (x_j^mu)^2),  w = 1/2,
// with a Euclidean (all plus) sum in the exponent. The delta factor is handled by
// restricting to the surface sum_j x_j = 0, parametrized by x_1..x_{n-1}; that is
// the measure the delta induces, d^4x_1 ... d^4x_{n-1}.

#include <string>
#include <utility>
#include <vector>

#include "qst/types.hpp"

namespace qst {

struct KernelSpec {
    int arity = 2;
    double normalization = 1.0;   // c_n
    double gaussian_width = 0.5;  // w
    bool translation_constraint = true;

    // Throws ValidationError for arity < 2 or a nonpositive width or normalization.
    void validate() const;
};

using EventPointList = std::vector<Vec4>;

inline constexpr double kConstraintTolerance = 1e-9;

// c_n exp(-w sum |x_j|^2) on the constraint surface. Throws DimensionMismatch if
// the point count differs from the arity and KernelConstraintViolated if
// |sum_j x_j| exceeds tol (relative to the largest point).
double kernel_density(const KernelSpec& spec, const EventPointList& points,
                      double tol = kConstraintTolerance);

// Appends x_n = -(x_1 + ... + x_{n-1}).
EventPointList complete_on_surface(const EventPointList& free_points);

// Integral of the kernel over the constraint surface (or over R^{4n} without the
// constraint).
double kernel_total_integral(const KernelSpec& spec);

// integral G_n(x) exp(i sum_j k_j . x_j) prod_j d^4x_j with the Euclidean pairing.
// With the constraint this is a Gaussian in the momentum components orthogonal to
// the total momentum:
//   c_n [(pi/w)^{(n-1)/2} / sqrt(n)]^4 exp(-(|k|^2 - |sum_j k_j|^2 / n) / (4w)).
complex kernel_fourier(const KernelSpec& spec, const std::vector<Vec4>& momenta);

// Envelope along one momentum-difference direction: k_1 = -k_2 = (q/2) e_x, other
// momenta zero, so q = |k_1 - k_2| is the transfer.
double transplanckian_damping(const KernelSpec& spec, double momentum_transfer);

std::vector<std::pair<double, double>> damping_profile(const KernelSpec& spec,
                                                       const std::vector<double>& transfers);

// Batch evaluation. Input rows "x1_0,...,xn_3" (a header row and '#' comments
// are passed through); output appends a "density" column.
std::string kernel_batch_csv(const KernelSpec& spec, const std::string& input,
                             double tol = kConstraintTolerance);

}  // namespace qst
