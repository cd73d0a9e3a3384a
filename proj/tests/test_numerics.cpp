#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qst/errors.hpp"
#include "qst/fit.hpp"
#include "qst/quadrature.hpp"

using namespace qst;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
    const auto r = quad::gauss_legendre(6, 0.0, 2.0);
    double s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], 11);
    CHECK(s == doctest::Approx(std::pow(2.0, 12) / 12.0).epsilon(1e-13));
}

TEST_CASE("Gauss-Hermite moments") {
    const auto r = quad::gauss_hermite(20);
    double m0 = 0.0, m2 = 0.0, m4 = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        m0 += r.weights[i];
        m2 += r.weights[i] * r.nodes[i] * r.nodes[i];
        m4 += r.weights[i] * std::pow(r.nodes[i], 4);
    }
    const double sp = std::sqrt(std::numbers::pi);
    CHECK(m0 == doctest::Approx(sp).epsilon(1e-13));
    CHECK(m2 == doctest::Approx(sp / 2).epsilon(1e-13));
    CHECK(m4 == doctest::Approx(3 * sp / 4).epsilon(1e-13));
}

TEST_CASE("periodic trapezoid") {
    const auto r = quad::periodic_trapezoid(16);
    double s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::cos(r.nodes[i]) * std::cos(r.nodes[i]);
    CHECK(s == doctest::Approx(std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("line fit") {
    const double x[] = {0, 1, 2, 3};
    const double y[] = {1, 3, 5, 7};
    const auto f = fit_line(x, y);
    CHECK(f.slope == doctest::Approx(2.0));
    CHECK(f.intercept == doctest::Approx(1.0));
    CHECK(f.r_squared == doctest::Approx(1.0));
    const double noisy[] = {1, 2, 1, 2};
    CHECK(fit_line(x, noisy).r_squared < 0.5);
}

TEST_CASE("line fit input checks") {
    const double x[] = {1, 1};
    const double y[] = {0, 1};
    CHECK_THROWS_AS(fit_line(x, y), ValidationError);
    CHECK_THROWS_AS(fit_line(std::span<const double>(x, 1), std::span<const double>(y, 1)), ValidationError);
}
