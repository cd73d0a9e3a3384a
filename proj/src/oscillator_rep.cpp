#include "qst/oscillator_rep.hpp"

#include <cmath>

#include "qst/errors.hpp"

namespace qst {

CMatrix ladder_matrix(int n) {
    CMatrix a = CMatrix::Zero(n, n);
    for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    return a;
}

CMatrix position_matrix(int n) {
    const CMatrix a = ladder_matrix(n);
    return (a + a.adjoint()) / std::sqrt(2.0);
}

CMatrix momentum_matrix(int n) {
    const CMatrix a = ladder_matrix(n);
    return (a - a.adjoint()) / (I_unit * std::sqrt(2.0));
}

SparseCMatrix sparse_identity(Eigen::Index n) {
    SparseCMatrix id(n, n);
    id.setIdentity();
    return id;
}

SparseCMatrix sparse_kron(const SparseCMatrix& a, const SparseCMatrix& b) {
    std::vector<Eigen::Triplet<complex>> triplets;
    triplets.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
    for (int ka = 0; ka < a.outerSize(); ++ka) {
        for (SparseCMatrix::InnerIterator ia(a, ka); ia; ++ia) {
            for (int kb = 0; kb < b.outerSize(); ++kb) {
                for (SparseCMatrix::InnerIterator ib(b, kb); ib; ++ib) {
                    triplets.emplace_back(ia.row() * b.rows() + ib.row(),
                                          ia.col() * b.cols() + ib.col(),
                                          ia.value() * ib.value());
                }
            }
        }
    }
    SparseCMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    out.setFromTriplets(triplets.begin(), triplets.end());
    return out;
}

std::vector<int> mode_levels(Eigen::Index index, int dim_per_mode, int num_modes) {
    std::vector<int> levels(num_modes);
    for (int m = num_modes - 1; m >= 0; --m) {
        levels[m] = static_cast<int>(index % dim_per_mode);
        index /= dim_per_mode;
    }
    return levels;
}

std::vector<Eigen::Index> low_lying_indices(int dim_per_mode, int num_modes, int max_level) {
    Eigen::Index total = 1;
    for (int m = 0; m < num_modes; ++m) total *= dim_per_mode;
    std::vector<Eigen::Index> out;
    for (Eigen::Index i = 0; i < total; ++i) {
        const auto levels = mode_levels(i, dim_per_mode, num_modes);
        bool ok = true;
        for (int l : levels) ok = ok && l <= max_level;
        if (ok) out.push_back(i);
    }
    return out;
}

CoordinateSet::CoordinateSet(int dim_per_mode, int num_modes, std::array<SparseCMatrix, 4> q,
                             SigmaPoint sigma, std::optional<ModeFactors> factors)
    : dim_per_mode_(dim_per_mode),
      num_modes_(num_modes),
      q_(std::move(q)),
      sigma_(std::move(sigma)),
      factors_(std::move(factors)) {
    Eigen::Index expected = 1;
    for (int m = 0; m < num_modes; ++m) expected *= dim_per_mode;
    for (const auto& qm : q_) {
        if (qm.rows() != expected || qm.cols() != expected)
            throw DimensionMismatch("coordinate matrix is not " + std::to_string(expected) +
                                    " square");
    }
}

CoordinateSet build_coordinates(int n) {
    if (n < 2) throw DimensionTooSmall("need at least 2 levels per mode, got " + std::to_string(n));
    CMatrix x = position_matrix(n);
    CMatrix p = momentum_matrix(n);
    const SparseCMatrix xs = x.sparseView();
    const SparseCMatrix ps = p.sparseView();
    const SparseCMatrix id = sparse_identity(n);
    std::array<SparseCMatrix, 4> q = {sparse_kron(xs, id), sparse_kron(ps, id),
                                      sparse_kron(id, xs), sparse_kron(id, ps)};
    return CoordinateSet(n, 2, std::move(q), SigmaPoint::standard(),
                         CoordinateSet::ModeFactors{std::move(x), std::move(p)});
}

CoordinateSet transformed(const CoordinateSet& c, const LorentzTransform& lorentz) {
    const Mat4& l = lorentz.matrix();
    std::array<SparseCMatrix, 4> q;
    for (int mu = 0; mu < 4; ++mu) {
        SparseCMatrix acc(c.dimension(), c.dimension());
        for (int nu = 0; nu < 4; ++nu) {
            if (l(mu, nu) != 0.0) acc += complex(l(mu, nu)) * c.q(nu);
        }
        q[mu] = acc;
    }
    const bool trivial = (l - Mat4::Identity()).cwiseAbs().maxCoeff() == 0.0;
    return CoordinateSet(c.dim_per_mode(), c.num_modes(), std::move(q),
                         lorentz_act(lorentz, c.sigma()),
                         trivial ? c.factors() : std::nullopt);
}

CMatrix hermitian_exp_i(const CMatrix& h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
    const CVector phases = (I_unit * eig.eigenvalues().cast<complex>()).array().exp();
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

WeylOperator WeylOperator::factored(CMatrix mode1, CMatrix mode2) {
    WeylOperator w;
    w.factored_ = true;
    w.a_ = std::move(mode1);
    w.b_ = std::move(mode2);
    return w;
}

WeylOperator WeylOperator::full(CMatrix matrix) {
    WeylOperator w;
    w.a_ = std::move(matrix);
    return w;
}

Eigen::Index WeylOperator::dimension() const {
    return factored_ ? a_.rows() * b_.rows() : a_.rows();
}

CVector WeylOperator::apply(const CVector& v) const {
    if (v.size() != dimension())
        throw DimensionMismatch("vector of size " + std::to_string(v.size()) +
                                " for operator of dimension " + std::to_string(dimension()));
    if (!factored_) return a_ * v;
    // Row-major reshape: psi(i, j) = v[i * n2 + j]; (A (x) B) psi = A psi B^T.
    const Eigen::Index n1 = a_.rows();
    const Eigen::Index n2 = b_.rows();
    using RowMajor = Eigen::Matrix<complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    Eigen::Map<const RowMajor> psi(v.data(), n1, n2);
    RowMajor out = a_ * psi * b_.transpose();
    return Eigen::Map<const CVector>(out.data(), n1 * n2);
}

CMatrix WeylOperator::dense() const {
    if (!factored_) return a_;
    const Eigen::Index n1 = a_.rows();
    const Eigen::Index n2 = b_.rows();
    CMatrix out(n1 * n2, n1 * n2);
    for (Eigen::Index i = 0; i < n1; ++i)
        for (Eigen::Index k = 0; k < n1; ++k) out.block(i * n2, k * n2, n2, n2) = a_(i, k) * b_;
    return out;
}

WeylOperator weyl(const CoordinateSet& c, const WeylExponent& exponent) {
    const Vec4& alpha = exponent.alpha;
    if (!alpha.allFinite()) throw ValidationError("Weyl exponent has non-finite entries");
    // alpha_mu q^mu = alpha_0 q_0 - alpha_j q_j
    const Vec4 lowered = minkowski_metric() * alpha;
    if (c.factors()) {
        const auto& f = *c.factors();
        const CMatrix h1 = lowered(0) * f.x + lowered(1) * f.p;
        const CMatrix h2 = lowered(2) * f.x + lowered(3) * f.p;
        return WeylOperator::factored(hermitian_exp_i(h1), hermitian_exp_i(h2));
    }
    constexpr Eigen::Index kMaxDense = 4096;
    if (c.dimension() > kMaxDense)
        throw ValidationError("dense Weyl operator of dimension " + std::to_string(c.dimension()) +
                              " exceeds " + std::to_string(kMaxDense));
    SparseCMatrix h(c.dimension(), c.dimension());
    for (int mu = 0; mu < 4; ++mu) h += complex(lowered(mu)) * c.q(mu);
    return WeylOperator::full(hermitian_exp_i(CMatrix(h)));
}

complex weyl_twist_phase(const SigmaPoint& sigma, const WeylExponent& alpha,
                         const WeylExponent& beta) {
    const Mat4 g = minkowski_metric();
    const double contraction = alpha.alpha.dot(g * sigma.tensor() * g * beta.alpha);
    return std::exp(-0.5 * I_unit * contraction);
}

double weyl_composition_residual(const CoordinateSet& c, const WeylExponent& alpha,
                                 const WeylExponent& beta, const CVector& psi) {
    const CVector lhs = weyl(c, alpha).apply(weyl(c, beta).apply(psi));
    const CVector rhs = weyl_twist_phase(c.sigma(), alpha, beta) *
                        weyl(c, WeylExponent{alpha.alpha + beta.alpha}).apply(psi);
    return (lhs - rhs).norm();
}

double commutator_residual(const SparseCMatrix& a, const SparseCMatrix& b, complex expected,
                           int dim_per_mode, int num_modes, int level) {
    SparseCMatrix comm = a * b - b * a;
    if (expected != complex(0.0)) comm -= expected * sparse_identity(a.rows());
    double worst = 0.0;
    for (Eigen::Index col : low_lying_indices(dim_per_mode, num_modes, level)) {
        double sq = 0.0;
        for (SparseCMatrix::InnerIterator it(comm, col); it; ++it) sq += std::norm(it.value());
        worst = std::max(worst, std::sqrt(sq));
    }
    return worst;
}

double commutator_residual(const CoordinateSet& c, int mu, int nu, int level) {
    if (mu < 0 || mu > 3 || nu < 0 || nu > 3)
        throw IndexOutOfRange("coordinate indices must lie in 0..3");
    if (level < 0 || level >= c.dim_per_mode())
        throw IndexOutOfRange("subspace level " + std::to_string(level) + " outside 0.." +
                              std::to_string(c.dim_per_mode() - 1));
    const complex expected = I_unit * c.sigma().tensor()(mu, nu);
    return commutator_residual(c.q(mu), c.q(nu), expected, c.dim_per_mode(), c.num_modes(), level);
}

StateVector::StateVector(CVector coefficients, int dim_per_mode, int num_modes)
    : coefficients_(std::move(coefficients)), dim_per_mode_(dim_per_mode), num_modes_(num_modes) {
    Eigen::Index expected = 1;
    for (int m = 0; m < num_modes; ++m) expected *= dim_per_mode;
    if (coefficients_.size() != expected)
        throw DimensionMismatch("state has " + std::to_string(coefficients_.size()) +
                                " coefficients, expected " + std::to_string(expected));
    if (std::abs(coefficients_.norm() - 1.0) > 1e-12)
        throw ValidationError("state vector is not normalized");
}

StateVector StateVector::normalized(CVector coefficients, int dim_per_mode, int num_modes) {
    const double norm = coefficients.norm();
    if (norm == 0.0) throw ValidationError("cannot normalize the zero vector");
    return StateVector(coefficients / norm, dim_per_mode, num_modes);
}

StateVector StateVector::basis(int dim_per_mode, const std::vector<int>& levels) {
    Eigen::Index index = 0;
    Eigen::Index total = 1;
    for (int l : levels) {
        if (l < 0 || l >= dim_per_mode) throw IndexOutOfRange("basis level out of range");
        index = index * dim_per_mode + l;
        total *= dim_per_mode;
    }
    CVector v = CVector::Zero(total);
    v(index) = 1.0;
    return StateVector(std::move(v), dim_per_mode, static_cast<int>(levels.size()));
}

double StateVector::weight_at_or_above(int min_level) const {
    double weight = 0.0;
    for (Eigen::Index i = 0; i < coefficients_.size(); ++i) {
        const auto levels = mode_levels(i, dim_per_mode_, num_modes_);
        for (int l : levels) {
            if (l >= min_level) {
                weight += std::norm(coefficients_(i));
                break;
            }
        }
    }
    return weight;
}

StateVector ground_state(int dim_per_mode, int num_modes) {
    return StateVector::basis(dim_per_mode, std::vector<int>(num_modes, 0));
}

complex characteristic_function(const StateVector& psi, const CoordinateSet& c,
                                const WeylExponent& k) {
    if (psi.coefficients().size() != c.dimension())
        throw DimensionMismatch("state dimension " + std::to_string(psi.coefficients().size()) +
                                " vs representation dimension " + std::to_string(c.dimension()));
    const CVector moved = weyl(c, k).apply(psi.coefficients());
    return psi.coefficients().dot(moved);
}

}  // namespace qst
