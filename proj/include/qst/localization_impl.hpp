#pragma once

#include <random>

namespace qst {

template <typename Rng>
StateVector random_low_lying_state(const CoordinateSet& c, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const int half = c.dim_per_mode() / 2;
    CVector v = CVector::Zero(c.dimension());
    for (Eigen::Index i : low_lying_indices(c.dim_per_mode(), c.num_modes(), half - 1)) {
        const double re = normal(rng);
        const double im = normal(rng);
        v(i) = complex(re, im);
    }
    return StateVector::normalized(std::move(v), c.dim_per_mode(), c.num_modes());
}

}  // namespace qst
