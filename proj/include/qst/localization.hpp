#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qst/oscillator_rep.hpp"

namespace qst {

struct UncertaintyReport {
    std::array<double, 4> deltas{};
    double product_time_space = 0.0;   // dq0 (dq1 + dq2 + dq3)
    double product_space_space = 0.0;  // sum_{j<k} dq_j dq_k
    // Set when the top quarter of levels carries >= 1e-6 of the norm.
    bool edge_flag = false;

    double sum_of_squares() const;
};

// "dq0,dq1,dq2,dq3,prod_ts,prod_ss,edge_flag"
std::string to_csv(const UncertaintyReport& report);
UncertaintyReport uncertainty_from_csv(std::string_view line);

UncertaintyReport uncertainties(const StateVector& psi, const CoordinateSet& c);

// Normalized state with complex Gaussian coefficients on levels below N/2 in every mode.
template <typename Rng>
StateVector random_low_lying_state(const CoordinateSet& c, Rng& rng);

std::vector<UncertaintyReport> sample_uncertainties(const CoordinateSet& c, int num_samples,
                                                    std::uint64_t seed);

struct UncertaintyFloor {
    double min_time_space = 0.0;
    double min_space_space = 0.0;
    double min_sum_of_squares = 0.0;
};

UncertaintyFloor summarize(const std::vector<UncertaintyReport>& reports);
UncertaintyFloor sample_uncertainty_floor(const CoordinateSet& c, int num_samples,
                                          std::uint64_t seed);

struct SpectrumLevel {
    double value = 0.0;
    bool edge = false;
};

// First mode level counted as the truncation edge: ceil(3N/4).
int edge_level(int dim_per_mode);

// Lowest k eigenvalues of a Hermitian operator by dense diagonalization, with
// eigenvectors that reach the edge levels flagged.
std::vector<SpectrumLevel> lowest_levels_dense(const SparseCMatrix& op, int dim_per_mode,
                                               int num_modes, int k);

// sum_mu q_mu^2
SparseCMatrix length_operator(const CoordinateSet& c);

// Lowest k levels of sum_mu q_mu^2, edge-flagged entries included.
std::vector<SpectrumLevel> length_levels(const CoordinateSet& c, int k);

// Lowest k non-edge eigenvalues of sum_mu q_mu^2, ascending.
std::vector<double> euclidean_length_spectrum(const CoordinateSet& c, int k);

// Collapses values closer than tol into one level.
std::vector<double> distinct_levels(const std::vector<double>& values, double tol = 1e-6);

// Ground state of sum_mu q_mu^2 with its largest coefficient made real positive.
StateVector optimal_state(const CoordinateSet& c);

}  // namespace qst

#include "qst/localization_impl.hpp"
