#pragma once

// Two independent events on a shared four-mode space. Event 1 occupies modes
// (0, 1) and event 2 modes (2, 3); both carry the same central point sigma.

#include <string>
#include <vector>

#include "qst/localization.hpp"

namespace qst {

class PairSystem {
public:
    explicit PairSystem(int dim_per_mode);

    int dim_per_mode() const { return single_.dim_per_mode(); }
    Eigen::Index dimension() const;
    const SigmaPoint& sigma() const { return single_.sigma(); }
    // The single-event representation both events are copies of.
    const CoordinateSet& single() const { return single_; }

    // Coordinates of event j (1 or 2) on the pair space. Built on demand.
    CoordinateSet event(int j) const;

private:
    CoordinateSet single_;
};

// Throws DimensionTooSmall for n < 2.
PairSystem build_pair(int n);

// d_mu = (q_mu^(1) - q_mu^(2)) / sqrt(2)
CoordinateSet difference_coordinates(const PairSystem& p);
// b_mu = (q_mu^(1) + q_mu^(2)) / sqrt(2)
CoordinateSet barycenter_coordinates(const PairSystem& p);

// sum_mu (q_mu^(1) - q_mu^(2))^2
SparseCMatrix pair_distance_operator(const PairSystem& p);

enum class DistanceMethod { normal_mode, brute_force };

std::string to_string(DistanceMethod method);
DistanceMethod distance_method_from_string(const std::string& name);

inline constexpr int kMaxBruteForceDim = 10;

// Lowest k levels, edge-flagged entries included.
std::vector<SpectrumLevel> pair_distance_levels(const PairSystem& p, int k, DistanceMethod method);

// Lowest k non-edge eigenvalues of the squared distance, ascending, with
// multiplicity. brute_force throws BruteForceTooLarge for N > 10.
std::vector<double> pair_distance_spectrum(const PairSystem& p, int k, DistanceMethod method);

struct ReducedObservable {
    CMatrix matrix;    // on the single-event space
    int dim_per_mode;  // N - margin
};

// Isometry from the single-event space (truncated at N - margin levels) into the
// pair space: barycenter Fock state (x) difference-mode vacuum.
SparseCMatrix diagonal_embedding(const PairSystem& p, int margin = 2);

// Evaluates the difference modes in their optimally localized ground state and keeps
// the barycenter factor, identified with a single event. The output truncation is
// N - margin levels per mode; margin 2 keeps quadratic observables exact.
// Throws NotFactorizable when the observable leaves the sector where the
// barycenter/difference mode transform is exact.
ReducedObservable quantum_diagonal_reduce(const PairSystem& p, const SparseCMatrix& observable,
                                          int margin = 2, double tol = 1e-10);

// True for pair-space basis states on which the mode transform is exact:
// n_a + n_c <= N - 1 and n_b + n_d <= N - 1.
bool in_exact_sector(Eigen::Index index, int dim_per_mode);

}  // namespace qst
