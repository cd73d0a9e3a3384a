#pragma once

#include <vector>

namespace qst::quad {

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

// Gauss-Legendre on [a, b].
Rule gauss_legendre(int n, double a = -1.0, double b = 1.0);

// Gauss-Hermite for weight exp(-x^2) on the real line.
Rule gauss_hermite(int n);

// Equispaced periodic rule on [0, 2 pi).
Rule periodic_trapezoid(int n);

}  // namespace qst::quad
