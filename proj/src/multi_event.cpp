#include "qst/multi_event.hpp"

#include <cmath>

#include "qst/errors.hpp"

namespace qst {

namespace {

double binomial_sqrt(int n, int k) {
    return std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

CoordinateSet combine(const PairSystem& p, double sign) {
    const CoordinateSet one = p.event(1);
    const CoordinateSet two = p.event(2);
    const double scale = 1.0 / std::sqrt(2.0);
    std::array<SparseCMatrix, 4> q;
    for (int mu = 0; mu < 4; ++mu) {
        q[mu] = complex(scale) * (one.q(mu) + complex(sign) * two.q(mu));
        q[mu].prune(complex(0.0));
    }
    return CoordinateSet(p.dim_per_mode(), 4, std::move(q), p.sigma());
}

void check_brute_force(const PairSystem& p) {
    if (p.dim_per_mode() > kMaxBruteForceDim)
        throw BruteForceTooLarge("brute force limited to N <= " +
                                 std::to_string(kMaxBruteForceDim) + ", got " +
                                 std::to_string(p.dim_per_mode()));
}

}  // namespace

PairSystem::PairSystem(int dim_per_mode) : single_(build_coordinates(dim_per_mode)) {}

Eigen::Index PairSystem::dimension() const {
    const Eigen::Index n = single_.dimension();
    return n * n;
}

CoordinateSet PairSystem::event(int j) const {
    if (j != 1 && j != 2) throw IndexOutOfRange("event index must be 1 or 2");
    const SparseCMatrix id = sparse_identity(single_.dimension());
    std::array<SparseCMatrix, 4> q;
    for (int mu = 0; mu < 4; ++mu)
        q[mu] = j == 1 ? sparse_kron(single_.q(mu), id) : sparse_kron(id, single_.q(mu));
    return CoordinateSet(dim_per_mode(), 4, std::move(q), sigma());
}

PairSystem build_pair(int n) {
    if (n < 2) throw DimensionTooSmall("need at least 2 levels per mode, got " + std::to_string(n));
    return PairSystem(n);
}

CoordinateSet difference_coordinates(const PairSystem& p) { return combine(p, -1.0); }

CoordinateSet barycenter_coordinates(const PairSystem& p) { return combine(p, +1.0); }

SparseCMatrix pair_distance_operator(const PairSystem& p) {
    const CoordinateSet one = p.event(1);
    const CoordinateSet two = p.event(2);
    SparseCMatrix op(p.dimension(), p.dimension());
    for (int mu = 0; mu < 4; ++mu) {
        const SparseCMatrix diff = one.q(mu) - two.q(mu);
        op += diff * diff;
    }
    op.prune(complex(0.0));
    return op;
}

std::string to_string(DistanceMethod method) {
    return method == DistanceMethod::normal_mode ? "normal_mode" : "brute_force";
}

DistanceMethod distance_method_from_string(const std::string& name) {
    if (name == "normal_mode") return DistanceMethod::normal_mode;
    if (name == "brute_force") return DistanceMethod::brute_force;
    throw ValidationError("unknown distance method '" + name + "'");
}

std::vector<SpectrumLevel> pair_distance_levels(const PairSystem& p, int k, DistanceMethod method) {
    if (k < 1) throw ValidationError("k must be >= 1");
    if (method == DistanceMethod::normal_mode) {
        // sum (q1 - q2)^2 = 2 sum d^2, and d obeys the single-event relations.
        auto levels = length_levels(p.single(), k);
        for (auto& l : levels) l.value *= 2.0;
        return levels;
    }
    check_brute_force(p);
    return lowest_levels_dense(pair_distance_operator(p), p.dim_per_mode(), 4, k);
}

std::vector<double> pair_distance_spectrum(const PairSystem& p, int k, DistanceMethod method) {
    if (k < 1) throw ValidationError("k must be >= 1");
    if (method == DistanceMethod::normal_mode) {
        auto values = euclidean_length_spectrum(p.single(), k);
        for (double& v : values) v *= 2.0;
        return values;
    }
    check_brute_force(p);
    const auto levels = lowest_levels_dense(pair_distance_operator(p), p.dim_per_mode(), 4,
                                            static_cast<int>(p.dimension()));
    std::vector<double> out;
    for (const auto& l : levels) {
        if (l.edge) continue;
        out.push_back(l.value);
        if (static_cast<int>(out.size()) == k) return out;
    }
    throw ValidationError("only " + std::to_string(out.size()) + " non-edge levels available");
}

bool in_exact_sector(Eigen::Index index, int n) {
    const auto l = mode_levels(index, n, 4);
    return l[0] + l[2] <= n - 1 && l[1] + l[3] <= n - 1;
}

SparseCMatrix diagonal_embedding(const PairSystem& p, int margin) {
    const int n = p.dim_per_mode();
    const int reduced = n - margin;
    if (margin < 0) throw ValidationError("margin must be nonnegative");
    if (reduced < 2)
        throw DimensionTooSmall("reduced truncation " + std::to_string(reduced) + " below 2");
    // |k>_B |0>_D on a mode pair = sum_j sqrt(C(k, j)) 2^{-k/2} |j>|k - j>
    auto pair_amplitudes = [](int level) {
        std::vector<double> amps(level + 1);
        for (int j = 0; j <= level; ++j) amps[j] = binomial_sqrt(level, j) * std::pow(2.0, -0.5 * level);
        return amps;
    };
    std::vector<Eigen::Triplet<complex>> triplets;
    for (int n1 = 0; n1 < reduced; ++n1) {
        const auto a1 = pair_amplitudes(n1);
        for (int n2 = 0; n2 < reduced; ++n2) {
            const auto a2 = pair_amplitudes(n2);
            const Eigen::Index col = static_cast<Eigen::Index>(n1) * reduced + n2;
            for (int ja = 0; ja <= n1; ++ja) {
                for (int jb = 0; jb <= n2; ++jb) {
                    const Eigen::Index na = ja, nc = n1 - ja, nb = jb, nd = n2 - jb;
                    const Eigen::Index row = ((na * n + nb) * n + nc) * n + nd;
                    triplets.emplace_back(row, col, a1[ja] * a2[jb]);
                }
            }
        }
    }
    SparseCMatrix v(p.dimension(), static_cast<Eigen::Index>(reduced) * reduced);
    v.setFromTriplets(triplets.begin(), triplets.end());
    return v;
}

ReducedObservable quantum_diagonal_reduce(const PairSystem& p, const SparseCMatrix& observable,
                                          int margin, double tol) {
    if (observable.rows() != p.dimension() || observable.cols() != p.dimension())
        throw DimensionMismatch("observable must be " + std::to_string(p.dimension()) + " square");
    const SparseCMatrix v = diagonal_embedding(p, margin);
    const SparseCMatrix image = observable * v;

    double total = 0.0;
    double leak = 0.0;
    for (int k = 0; k < image.outerSize(); ++k) {
        for (SparseCMatrix::InnerIterator it(image, k); it; ++it) {
            const double w = std::norm(it.value());
            total += w;
            if (!in_exact_sector(it.row(), p.dim_per_mode())) leak += w;
        }
    }
    if (std::sqrt(leak) > tol * std::max(1.0, std::sqrt(total)))
        throw NotFactorizable("observable couples the diagonal states to the sector where the "
                              "barycenter/difference transform is truncated (leak " +
                              std::to_string(std::sqrt(leak)) + ")");

    const SparseCMatrix reduced = SparseCMatrix(v.adjoint()) * image;
    return {CMatrix(reduced), p.dim_per_mode() - margin};
}

}  // namespace qst
