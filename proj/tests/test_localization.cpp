#include <doctest.h>

#include <cmath>
#include <random>

#include "qst/errors.hpp"
#include "qst/localization.hpp"

using namespace qst;

TEST_CASE("edge level") {
    CHECK(edge_level(4) == 3);
    CHECK(edge_level(6) == 5);
    CHECK(edge_level(32) == 24);
}

TEST_CASE("length spectrum is 2(n1 + n2 + 1)") {
    const auto c = build_coordinates(32);
    const auto spec = euclidean_length_spectrum(c, 10);
    const double expected[] = {2, 4, 4, 6, 6, 6, 8, 8, 8, 8};
    for (int i = 0; i < 10; ++i) CHECK(std::abs(spec[i] - expected[i]) < 1e-8);
    CHECK(distinct_levels(spec) == std::vector<double>{spec[0], spec[1], spec[3], spec[6]});
}

TEST_CASE("Kronecker-sum levels agree with dense diagonalization") {
    const auto c = build_coordinates(8);
    const auto fast = length_levels(c, 64);
    const auto dense = lowest_levels_dense(length_operator(c), 8, 2, 64);
    REQUIRE(fast.size() == dense.size());
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(std::abs(fast[i].value - dense[i].value) < 1e-10);
    // below 2 only truncation artifacts appear, and those are flagged
    for (const auto& l : dense)
        if (l.value < 2.0 - 1e-6) CHECK(l.edge);
}

TEST_CASE("spectrum requests beyond the clean region fail loudly") {
    const auto c = build_coordinates(4);
    CHECK_THROWS_AS(euclidean_length_spectrum(c, 16), ValidationError);
    CHECK_THROWS_AS(euclidean_length_spectrum(c, 0), ValidationError);
}

TEST_CASE("ground-state uncertainties saturate at 3/2") {
    const auto c = build_coordinates(24);
    const auto r = uncertainties(ground_state(24), c);
    for (double d : r.deltas) CHECK(d == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(std::abs(r.product_time_space - 1.5) < 1e-8);
    CHECK(std::abs(r.product_space_space - 1.5) < 1e-8);
    CHECK(std::abs(r.sum_of_squares() - 2.0) < 1e-8);
    CHECK_FALSE(r.edge_flag);
}

TEST_CASE("random low-lying states respect the uncertainty floor") {
    const auto c = build_coordinates(16);
    const auto reports = sample_uncertainties(c, 500, 42);
    for (const auto& r : reports) {
        CHECK(r.product_time_space > 0.4);
        CHECK(r.product_space_space > 0.4);
        CHECK(r.sum_of_squares() >= 2.0 - 1e-6);
        CHECK_FALSE(r.edge_flag);
    }
    const auto f = summarize(reports);
    CHECK(f.min_sum_of_squares >= 2.0 - 1e-6);
    const auto again = sample_uncertainty_floor(c, 500, 42);
    CHECK(again.min_time_space == f.min_time_space);
}

TEST_CASE("edge-heavy states are flagged") {
    const auto c = build_coordinates(8);
    const auto r = uncertainties(StateVector::basis(8, {7, 0}), c);
    CHECK(r.edge_flag);
    CHECK_THROWS_AS(uncertainties(ground_state(6), c), DimensionMismatch);
}

TEST_CASE("uncertainty report CSV round trip") {
    const auto r = uncertainties(StateVector::basis(8, {1, 2}), build_coordinates(8));
    const auto back = uncertainty_from_csv(to_csv(r));
    CHECK(back.deltas == r.deltas);
    CHECK(back.product_time_space == r.product_time_space);
    CHECK(back.edge_flag == r.edge_flag);
    CHECK_THROWS_AS(uncertainty_from_csv("1,2,3"), ValidationError);
}

TEST_CASE("optimal state is the oscillator vacuum") {
    const auto c = build_coordinates(20);
    const auto s = optimal_state(c);
    CHECK(std::abs(s.coefficients()(0) - 1.0) < 1e-10);
    const CVector v = s.coefficients();
    CHECK(std::abs(v.dot(length_operator(c) * v) - 2.0) < 1e-10);
}

TEST_CASE("distinct_levels") {
    CHECK(distinct_levels({3.0, 1.0, 1.0 + 1e-9, 2.0}) == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(distinct_levels({}).empty());
}
