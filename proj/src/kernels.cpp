#include "qst/kernels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qst/csv.hpp"
#include "qst/errors.hpp"

namespace qst {

void KernelSpec::validate() const {
    if (arity < 2) throw ValidationError("kernel arity must be >= 2, got " + std::to_string(arity));
    if (!(gaussian_width > 0.0)) throw ValidationError("kernel gaussian width must be positive");
    if (!(normalization > 0.0)) throw ValidationError("kernel normalization must be positive");
}

double kernel_density(const KernelSpec& spec, const EventPointList& points, double tol) {
    spec.validate();
    if (static_cast<int>(points.size()) != spec.arity)
        throw DimensionMismatch("kernel of arity " + std::to_string(spec.arity) + " given " +
                                std::to_string(points.size()) + " points");
    Vec4 total = Vec4::Zero();
    double largest = 1.0;
    double sum_sq = 0.0;
    for (const auto& x : points) {
        total += x;
        largest = std::max(largest, x.cwiseAbs().maxCoeff());
        sum_sq += x.squaredNorm();
    }
    if (spec.translation_constraint && total.cwiseAbs().maxCoeff() > tol * largest)
        throw KernelConstraintViolated("sum of points has magnitude " +
                                       std::to_string(total.norm()));
    return spec.normalization * std::exp(-spec.gaussian_width * sum_sq);
}

EventPointList complete_on_surface(const EventPointList& free_points) {
    EventPointList out = free_points;
    Vec4 total = Vec4::Zero();
    for (const auto& x : free_points) total += x;
    out.push_back(-total);
    return out;
}

double kernel_total_integral(const KernelSpec& spec) {
    spec.validate();
    const double n = spec.arity;
    const double per_axis = spec.translation_constraint
                                ? std::pow(std::numbers::pi / spec.gaussian_width, 0.5 * (n - 1)) / std::sqrt(n)
                                : std::pow(std::numbers::pi / spec.gaussian_width, 0.5 * n);
    return spec.normalization * std::pow(per_axis, 4);
}

complex kernel_fourier(const KernelSpec& spec, const std::vector<Vec4>& momenta) {
    spec.validate();
    if (static_cast<int>(momenta.size()) != spec.arity)
        throw DimensionMismatch("kernel of arity " + std::to_string(spec.arity) + " given " +
                                std::to_string(momenta.size()) + " momenta");
    Vec4 total = Vec4::Zero();
    double sum_sq = 0.0;
    for (const auto& k : momenta) {
        total += k;
        sum_sq += k.squaredNorm();
    }
    double quadratic = sum_sq;
    if (spec.translation_constraint) quadratic -= total.squaredNorm() / spec.arity;
    return kernel_total_integral(spec) * std::exp(-quadratic / (4.0 * spec.gaussian_width));
}

double transplanckian_damping(const KernelSpec& spec, double momentum_transfer) {
    if (momentum_transfer < 0.0) throw ValidationError("momentum transfer must be nonnegative");
    std::vector<Vec4> momenta(spec.arity, Vec4::Zero());
    momenta[0](1) = 0.5 * momentum_transfer;
    momenta[1](1) = -0.5 * momentum_transfer;
    return kernel_fourier(spec, momenta).real();
}

std::vector<std::pair<double, double>> damping_profile(const KernelSpec& spec,
                                                       const std::vector<double>& transfers) {
    std::vector<std::pair<double, double>> out;
    out.reserve(transfers.size());
    for (double q : transfers) out.emplace_back(q, transplanckian_damping(spec, q));
    return out;
}

std::string kernel_batch_csv(const KernelSpec& spec, const std::string& input, double tol) {
    spec.validate();
    const std::size_t width = 4 * static_cast<std::size_t>(spec.arity);
    std::istringstream in(input);
    std::ostringstream out;
    std::string line;
    bool seen_data_or_header = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') {
            out << line << '\n';
            continue;
        }
        const auto fields = csv::split(line);
        const bool header = !seen_data_or_header && fields.size() == width &&
                            fields[0].find_first_not_of("0123456789+-.eE ") != std::string_view::npos;
        seen_data_or_header = true;
        if (header) {
            out << line << ",density\n";
            continue;
        }
        if (fields.size() != width)
            throw ValidationError("kernel batch line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(width) + " fields");
        EventPointList points(spec.arity);
        for (int j = 0; j < spec.arity; ++j)
            for (int mu = 0; mu < 4; ++mu) points[j](mu) = csv::parse_double(fields[4 * j + mu]);
        out << line << ',' << csv::format(kernel_density(spec, points, tol)) << '\n';
    }
    return out.str();
}

}  // namespace qst
