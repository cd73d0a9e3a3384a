#include <doctest.h>

#include <cmath>

#include "qst/errors.hpp"
#include "qst/multi_event.hpp"

using namespace qst;

TEST_CASE("pair system layout") {
    const auto p = build_pair(4);
    CHECK(p.dimension() == 256);
    CHECK_THROWS_AS(build_pair(1), DimensionTooSmall);
    CHECK_THROWS_AS(p.event(3), IndexOutOfRange);
    // the two events commute with each other
    const auto one = p.event(1), two = p.event(2);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            CHECK(commutator_residual(one.q(mu), two.q(nu), 0.0, 4, 4, 3) < 1e-14);
}

TEST_CASE("difference and barycenter coordinates obey the single-event relations") {
    const auto p = build_pair(6);
    const auto d = difference_coordinates(p);
    const auto b = barycenter_coordinates(p);
    const Mat4 s = p.sigma().tensor();
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            CHECK(commutator_residual(d.q(mu), d.q(nu), I_unit * s(mu, nu), 6, 4, 3) < 1e-12);
            CHECK(commutator_residual(b.q(mu), b.q(nu), I_unit * s(mu, nu), 6, 4, 3) < 1e-12);
            CHECK(commutator_residual(b.q(mu), d.q(nu), 0.0, 6, 4, 3) < 1e-12);
        }
}

TEST_CASE("normal-mode distance spectrum") {
    const auto p = build_pair(32);
    const auto v = pair_distance_spectrum(p, 6, DistanceMethod::normal_mode);
    const double expected[] = {4, 8, 8, 12, 12, 12};
    for (int i = 0; i < 6; ++i) CHECK(std::abs(v[i] - expected[i]) < 1e-8);
}

TEST_CASE("brute-force distance spectrum agrees with normal modes") {
    const auto p = build_pair(5);
    const auto brute = pair_distance_spectrum(p, 1, DistanceMethod::brute_force);
    CHECK(std::abs(brute[0] - 4.0) < 1e-6);
    // anything below the bound is a truncation artifact and carries the edge flag
    for (const auto& l : pair_distance_levels(p, 40, DistanceMethod::brute_force))
        if (l.value < 4.0 - 1e-6) CHECK(l.edge);
    CHECK_THROWS_AS(pair_distance_spectrum(build_pair(11), 1, DistanceMethod::brute_force),
                    BruteForceTooLarge);
}

TEST_CASE("distance method names") {
    CHECK(distance_method_from_string(to_string(DistanceMethod::brute_force)) ==
          DistanceMethod::brute_force);
    CHECK_THROWS_AS(distance_method_from_string("lanczos"), ValidationError);
}

TEST_CASE("diagonal embedding is an isometry into the exact sector") {
    const auto p = build_pair(6);
    const SparseCMatrix v = diagonal_embedding(p);
    const CMatrix gram = CMatrix(SparseCMatrix(v.adjoint()) * v);
    CHECK((gram - CMatrix::Identity(16, 16)).norm() < 1e-13);
    for (int k = 0; k < v.outerSize(); ++k)
        for (SparseCMatrix::InnerIterator it(v, k); it; ++it) CHECK(in_exact_sector(it.row(), 6));
    CHECK_THROWS_AS(diagonal_embedding(p, 5), DimensionTooSmall);
}

TEST_CASE("quantum diagonal map") {
    const auto p = build_pair(8);
    const auto reduced = quantum_diagonal_reduce(p, pair_distance_operator(p));
    CHECK(reduced.dim_per_mode == 6);
    CHECK((reduced.matrix - 4.0 * CMatrix::Identity(36, 36)).cwiseAbs().maxCoeff() < 1e-8);

    const auto b = barycenter_coordinates(p);
    const auto single = build_coordinates(6);
    for (int mu = 0; mu < 4; ++mu) {
        const auto r = quantum_diagonal_reduce(p, b.q(mu));
        CHECK((r.matrix - CMatrix(single.q(mu))).cwiseAbs().maxCoeff() < 1e-12);
    }
    // difference coordinates have zero mean in the localized state
    for (int mu = 0; mu < 4; ++mu)
        CHECK(quantum_diagonal_reduce(p, difference_coordinates(p).q(mu)).matrix.cwiseAbs().maxCoeff() <
              1e-12);
}

TEST_CASE("quantum diagonal map refuses observables that leave the exact sector") {
    const auto p = build_pair(6);
    const SparseCMatrix q = p.event(1).q(0);
    const SparseCMatrix quartic = q * q * q * q;
    CHECK_THROWS_AS(quantum_diagonal_reduce(p, quartic), NotFactorizable);
    CHECK_NOTHROW(quantum_diagonal_reduce(p, quartic, 4));
    CHECK_THROWS_AS(quantum_diagonal_reduce(p, SparseCMatrix(10, 10)), DimensionMismatch);
}
