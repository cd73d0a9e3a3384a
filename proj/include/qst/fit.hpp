#pragma once

#include <span>

namespace qst {

struct LineFit {
    double intercept = 0.0;
    double slope = 0.0;
    double r_squared = 0.0;
};

// Ordinary least squares y = intercept + slope * x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace qst
