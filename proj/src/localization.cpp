#include "qst/localization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qst/csv.hpp"
#include "qst/errors.hpp"

namespace qst {

namespace {

constexpr double kEdgeWeight = 1e-6;

// Norm squared of v on basis states with some mode level >= edge.
double edge_weight(const CVector& v, int dim_per_mode, int num_modes) {
    const int edge = edge_level(dim_per_mode);
    double w = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const auto levels = mode_levels(i, dim_per_mode, num_modes);
        if (std::any_of(levels.begin(), levels.end(), [&](int l) { return l >= edge; }))
            w += std::norm(v(i));
    }
    return w;
}

void fix_phase(CVector& v) {
    Eigen::Index largest = 0;
    v.cwiseAbs().maxCoeff(&largest);
    const complex c = v(largest);
    v *= std::conj(c) / std::abs(c);
    v(largest) = std::abs(v(largest));
}

}  // namespace

double UncertaintyReport::sum_of_squares() const {
    double s = 0.0;
    for (double d : deltas) s += d * d;
    return s;
}

std::string to_csv(const UncertaintyReport& r) {
    const double values[] = {r.deltas[0], r.deltas[1], r.deltas[2], r.deltas[3],
                             r.product_time_space, r.product_space_space};
    return csv::join(values) + (r.edge_flag ? ",1" : ",0");
}

UncertaintyReport uncertainty_from_csv(std::string_view line) {
    const auto fields = csv::split(line);
    if (fields.size() != 7) throw ValidationError("uncertainty record needs 7 fields");
    UncertaintyReport r;
    for (int i = 0; i < 4; ++i) r.deltas[i] = csv::parse_double(fields[i]);
    r.product_time_space = csv::parse_double(fields[4]);
    r.product_space_space = csv::parse_double(fields[5]);
    r.edge_flag = csv::parse_double(fields[6]) != 0.0;
    return r;
}

UncertaintyReport uncertainties(const StateVector& psi, const CoordinateSet& c) {
    const CVector& v = psi.coefficients();
    if (v.size() != c.dimension())
        throw DimensionMismatch("state dimension " + std::to_string(v.size()) +
                                " vs representation dimension " + std::to_string(c.dimension()));
    UncertaintyReport r;
    for (int mu = 0; mu < 4; ++mu) {
        const CVector qv = c.q(mu) * v;
        const double mean = v.dot(qv).real();
        const double second = qv.squaredNorm();
        r.deltas[mu] = std::sqrt(std::max(0.0, second - mean * mean));
    }
    const auto& d = r.deltas;
    r.product_time_space = d[0] * (d[1] + d[2] + d[3]);
    r.product_space_space = d[1] * d[2] + d[1] * d[3] + d[2] * d[3];
    r.edge_flag = psi.weight_at_or_above(edge_level(c.dim_per_mode())) >= kEdgeWeight;
    return r;
}

std::vector<UncertaintyReport> sample_uncertainties(const CoordinateSet& c, int num_samples,
                                                    std::uint64_t seed) {
    if (num_samples < 1) throw ValidationError("need at least one sample");
    std::mt19937_64 rng(seed);
    std::vector<UncertaintyReport> reports;
    reports.reserve(num_samples);
    for (int s = 0; s < num_samples; ++s)
        reports.push_back(uncertainties(random_low_lying_state(c, rng), c));
    return reports;
}

UncertaintyFloor summarize(const std::vector<UncertaintyReport>& reports) {
    if (reports.empty()) throw ValidationError("no uncertainty reports to summarize");
    UncertaintyFloor f{reports[0].product_time_space, reports[0].product_space_space,
                       reports[0].sum_of_squares()};
    for (const auto& r : reports) {
        f.min_time_space = std::min(f.min_time_space, r.product_time_space);
        f.min_space_space = std::min(f.min_space_space, r.product_space_space);
        f.min_sum_of_squares = std::min(f.min_sum_of_squares, r.sum_of_squares());
    }
    return f;
}

UncertaintyFloor sample_uncertainty_floor(const CoordinateSet& c, int num_samples,
                                          std::uint64_t seed) {
    return summarize(sample_uncertainties(c, num_samples, seed));
}

int edge_level(int dim_per_mode) { return (3 * dim_per_mode + 3) / 4; }

std::vector<SpectrumLevel> lowest_levels_dense(const SparseCMatrix& op, int dim_per_mode,
                                               int num_modes, int k) {
    if (k < 1) throw ValidationError("k must be >= 1");
    Eigen::SelfAdjointEigenSolver<CMatrix> eig{CMatrix(op)};
    if (eig.info() != Eigen::Success) throw NumericalError("eigensolver failed");
    const Eigen::Index count = std::min<Eigen::Index>(k, op.rows());
    std::vector<SpectrumLevel> levels;
    levels.reserve(count);
    for (Eigen::Index i = 0; i < count; ++i) {
        const double w = edge_weight(eig.eigenvectors().col(i), dim_per_mode, num_modes);
        levels.push_back({eig.eigenvalues()(i), w >= kEdgeWeight});
    }
    return levels;
}

SparseCMatrix length_operator(const CoordinateSet& c) {
    SparseCMatrix op(c.dimension(), c.dimension());
    for (int mu = 0; mu < 4; ++mu) op += c.q(mu) * c.q(mu);
    return op;
}

namespace {

struct ModeSpectrum {
    RVector values;
    CMatrix vectors;
    std::vector<double> edge_weights;
};

// Single-mode x^2 + p^2; the two-mode operator is its Kronecker sum.
ModeSpectrum mode_spectrum(const CoordinateSet::ModeFactors& f, int n) {
    const CMatrix h = f.x * f.x + f.p * f.p;
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
    ModeSpectrum s{eig.eigenvalues(), eig.eigenvectors(), {}};
    const int edge = edge_level(n);
    for (int i = 0; i < n; ++i) s.edge_weights.push_back(s.vectors.col(i).tail(n - edge).squaredNorm());
    return s;
}

struct PairLevel {
    double value;
    double edge_weight;
    int i;
    int j;
};

std::vector<PairLevel> kronecker_sum_levels(const ModeSpectrum& s) {
    const auto n = static_cast<int>(s.values.size());
    std::vector<PairLevel> all;
    all.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double wi = s.edge_weights[i];
            const double wj = s.edge_weights[j];
            all.push_back({s.values(i) + s.values(j), 1.0 - (1.0 - wi) * (1.0 - wj), i, j});
        }
    std::stable_sort(all.begin(), all.end(),
                     [](const PairLevel& a, const PairLevel& b) { return a.value < b.value; });
    return all;
}

}  // namespace

std::vector<SpectrumLevel> length_levels(const CoordinateSet& c, int k) {
    if (k < 1) throw ValidationError("k must be >= 1");
    if (!c.factors()) return lowest_levels_dense(length_operator(c), c.dim_per_mode(), c.num_modes(), k);
    const auto all = kronecker_sum_levels(mode_spectrum(*c.factors(), c.dim_per_mode()));
    std::vector<SpectrumLevel> out;
    for (std::size_t i = 0; i < all.size() && static_cast<int>(out.size()) < k; ++i)
        out.push_back({all[i].value, all[i].edge_weight >= kEdgeWeight});
    return out;
}

std::vector<double> euclidean_length_spectrum(const CoordinateSet& c, int k) {
    if (k < 1) throw ValidationError("k must be >= 1");
    const Eigen::Index total = c.dimension();
    const auto levels = length_levels(c, static_cast<int>(total));
    std::vector<double> out;
    for (const auto& l : levels) {
        if (l.edge) continue;
        out.push_back(l.value);
        if (static_cast<int>(out.size()) == k) return out;
    }
    throw ValidationError("only " + std::to_string(out.size()) +
                          " non-edge levels available at this truncation, asked for " +
                          std::to_string(k));
}

std::vector<double> distinct_levels(const std::vector<double>& values, double tol) {
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> out;
    for (double v : sorted)
        if (out.empty() || v - out.back() > tol) out.push_back(v);
    return out;
}

StateVector optimal_state(const CoordinateSet& c) {
    CVector ground;
    double gap = 0.0;
    if (c.factors()) {
        const ModeSpectrum s = mode_spectrum(*c.factors(), c.dim_per_mode());
        const auto all = kronecker_sum_levels(s);
        gap = all[1].value - all[0].value;
        const Eigen::Index n = c.dim_per_mode();
        ground.resize(n * n);
        const CVector a = s.vectors.col(all[0].i);
        const CVector b = s.vectors.col(all[0].j);
        for (Eigen::Index i = 0; i < n; ++i) ground.segment(i * n, n) = a(i) * b;
    } else {
        Eigen::SelfAdjointEigenSolver<CMatrix> eig{CMatrix(length_operator(c))};
        gap = eig.eigenvalues()(1) - eig.eigenvalues()(0);
        ground = eig.eigenvectors().col(0);
    }
    if (gap < 1e-10)
        throw DegenerateGround("lowest two levels of the length operator differ by " +
                               std::to_string(gap));
    fix_phase(ground);
    return StateVector::normalized(std::move(ground), c.dim_per_mode(), c.num_modes());
}

}  // namespace qst
