#pragma once

// Truncated Schroedinger representation of the coordinates at the standard
// symplectic point: q0 = x1, q1 = p1, q2 = x2, q3 = p2 on a Fock space cut off
// at N levels per oscillator mode.

#include <array>
#include <optional>
#include <vector>

#include "qst/sigma_manifold.hpp"
#include "qst/types.hpp"

namespace qst {

// Single-mode operators in the number basis, N x N.
CMatrix ladder_matrix(int n);    // a, with a_{k-1,k} = sqrt(k)
CMatrix position_matrix(int n);  // (a + a^dag) / sqrt(2)
CMatrix momentum_matrix(int n);  // (a - a^dag) / (i sqrt(2))

SparseCMatrix sparse_kron(const SparseCMatrix& a, const SparseCMatrix& b);
SparseCMatrix sparse_identity(Eigen::Index n);

// Occupation numbers of a product-basis index; mode 0 is the most significant digit.
std::vector<int> mode_levels(Eigen::Index index, int dim_per_mode, int num_modes);
// Basis indices whose every mode level is <= max_level.
std::vector<Eigen::Index> low_lying_indices(int dim_per_mode, int num_modes, int max_level);

class CoordinateSet {
public:
    // Single-mode x and p for the two tensor factors of a mode-factored set.
    struct ModeFactors {
        CMatrix x;
        CMatrix p;
    };

    CoordinateSet(int dim_per_mode, int num_modes, std::array<SparseCMatrix, 4> q,
                  SigmaPoint sigma, std::optional<ModeFactors> factors = std::nullopt);

    int dim_per_mode() const { return dim_per_mode_; }
    int num_modes() const { return num_modes_; }
    Eigen::Index dimension() const { return q_[0].rows(); }
    const SparseCMatrix& q(int mu) const { return q_.at(mu); }
    const SigmaPoint& sigma() const { return sigma_; }

    // Present when q = (x (x) 1, p (x) 1, 1 (x) x, 1 (x) p).
    const std::optional<ModeFactors>& factors() const { return factors_; }

private:
    int dim_per_mode_;
    int num_modes_;
    std::array<SparseCMatrix, 4> q_;
    SigmaPoint sigma_;
    std::optional<ModeFactors> factors_;
};

// Throws DimensionTooSmall for n < 2.
CoordinateSet build_coordinates(int n);

// q'_mu = L_mu^nu q_nu, represented point L sigma L^T. Drops the mode factorization
// unless L is the identity.
CoordinateSet transformed(const CoordinateSet& c, const LorentzTransform& lorentz);

struct WeylExponent {
    Vec4 alpha = Vec4::Zero();
};

// exp(i alpha_mu q^mu), kept as a Kronecker product when the set is mode-factored.
class WeylOperator {
public:
    static WeylOperator factored(CMatrix mode1, CMatrix mode2);
    static WeylOperator full(CMatrix matrix);

    Eigen::Index dimension() const;
    CVector apply(const CVector& v) const;
    CMatrix dense() const;
    bool is_factored() const { return factored_; }

private:
    bool factored_ = false;
    CMatrix a_;  // mode 1 factor, or the full matrix
    CMatrix b_;  // mode 2 factor
};

// exp(i H) for Hermitian H via its eigendecomposition.
CMatrix hermitian_exp_i(const CMatrix& h);

WeylOperator weyl(const CoordinateSet& c, const WeylExponent& exponent);

// exp(-(i/2) alpha_mu sigma^{mu nu} beta_nu), indices raised with the metric.
complex weyl_twist_phase(const SigmaPoint& sigma, const WeylExponent& alpha,
                         const WeylExponent& beta);

// ||(W(alpha) W(beta) - twist W(alpha + beta)) psi||
double weyl_composition_residual(const CoordinateSet& c, const WeylExponent& alpha,
                                 const WeylExponent& beta, const CVector& psi);

// Max over product-basis states with every mode level <= level of
// ||([A, B] - expected) psi||.
double commutator_residual(const SparseCMatrix& a, const SparseCMatrix& b, complex expected,
                           int dim_per_mode, int num_modes, int level);

// Residual of [q_mu, q_nu] = i sigma_{mu nu} on the low-lying subspace.
double commutator_residual(const CoordinateSet& c, int mu, int nu, int level);

class StateVector {
public:
    // Throws ValidationError unless |coefficients| = 1 within 1e-12.
    StateVector(CVector coefficients, int dim_per_mode, int num_modes = 2);
    static StateVector normalized(CVector coefficients, int dim_per_mode, int num_modes = 2);
    static StateVector basis(int dim_per_mode, const std::vector<int>& levels);

    const CVector& coefficients() const { return coefficients_; }
    int dim_per_mode() const { return dim_per_mode_; }
    int num_modes() const { return num_modes_; }

    // Norm squared carried by basis states with some mode level >= min_level.
    double weight_at_or_above(int min_level) const;

private:
    CVector coefficients_;
    int dim_per_mode_;
    int num_modes_;
};

StateVector ground_state(int dim_per_mode, int num_modes = 2);

// <psi, exp(i k_mu q^mu) psi>. Throws DimensionMismatch.
complex characteristic_function(const StateVector& psi, const CoordinateSet& c,
                                const WeylExponent& k);

}  // namespace qst
