#include "qst/field_commutator.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qst/csv.hpp"
#include "qst/errors.hpp"
#include "qst/fit.hpp"
#include "qst/quadrature.hpp"

namespace qst {

namespace {

constexpr double kConvergenceTolerance = 1e-4;
// Absolute floor for the convergence test, relative to the largest possible |C|.
constexpr double kConvergenceFloor = 1e-13;

double inv_two_pi_cubed() { return 1.0 / std::pow(2.0 * std::numbers::pi, 3); }

double weight_scale(const MomentumGrid& grid, double mass, double char_width) {
    double s = 0.0;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
        const double k2 = grid.nodes[i].squaredNorm();
        const double k0 = std::sqrt(k2 + mass * mass);
        s += grid.weights[i] / (2.0 * k0) * std::exp(-char_width * (k0 * k0 + k2));
    }
    return 2.0 * inv_two_pi_cubed() * s;
}

}  // namespace

void QuadratureSpec::validate() const {
    if (radial_nodes < 16 || polar_nodes < 16 || azimuth_nodes < 16)
        throw ValidationError("quadrature needs at least 16 nodes per dimension");
    if (!(k_max > 0.0)) throw ValidationError("k_max must be positive");
}

QuadratureSpec QuadratureSpec::refined() const {
    return {k_max, 2 * radial_nodes, 2 * polar_nodes, 2 * azimuth_nodes};
}

MomentumGrid build_grid(const QuadratureSpec& quad) {
    quad.validate();
    const auto radial = quad::gauss_legendre(quad.radial_nodes, 0.0, quad.k_max);
    const auto polar = quad::gauss_legendre(quad.polar_nodes, -1.0, 1.0);
    const auto azimuth = quad::periodic_trapezoid(quad.azimuth_nodes);
    MomentumGrid g;
    g.nodes.reserve(radial.size() * polar.size() * azimuth.size());
    g.weights.reserve(g.nodes.capacity());
    for (std::size_t ir = 0; ir < radial.size(); ++ir) {
        const double k = radial.nodes[ir];
        for (std::size_t it = 0; it < polar.size(); ++it) {
            const double ct = polar.nodes[it];
            const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
            for (std::size_t ip = 0; ip < azimuth.size(); ++ip) {
                const double phi = azimuth.nodes[ip];
                g.nodes.emplace_back(k * st * std::cos(phi), k * st * std::sin(phi), k * ct);
                g.weights.push_back(radial.weights[ir] * k * k * polar.weights[it] *
                                    azimuth.weights[ip]);
            }
        }
    }
    return g;
}

MomentumGrid rotate(const MomentumGrid& grid, const Mat3& rotation) {
    MomentumGrid out = grid;
    for (auto& k : out.nodes) k = rotation * k;
    return out;
}

complex evaluate_commutator(const MomentumGrid& grid, const Vec4& a, double mass, double char_width) {
    if (mass < 0.0) throw ValidationError("mass must be nonnegative");
    const Vec3 spatial = a.tail<3>();
    complex sum = 0.0;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
        const Vec3& k = grid.nodes[i];
        const double k2 = k.squaredNorm();
        const double k0 = std::sqrt(k2 + mass * mass);
        const double weight = grid.weights[i] / (2.0 * k0) * std::exp(-char_width * (k0 * k0 + k2));
        const double phase = k0 * a(0) - k.dot(spatial);
        sum += weight * (std::exp(-I_unit * phase) - std::exp(I_unit * phase));
    }
    return inv_two_pi_cubed() * sum;
}

complex smeared_commutator(const Vec4& a, double mass, double char_width, const QuadratureSpec& quad) {
    if (mass < 0.0) throw ValidationError("mass must be nonnegative");
    const MomentumGrid coarse = build_grid(quad);
    const MomentumGrid fine = build_grid(quad.refined());
    const complex c_coarse = evaluate_commutator(coarse, a, mass, char_width);
    const complex c_fine = evaluate_commutator(fine, a, mass, char_width);
    const double floor = kConvergenceFloor * weight_scale(fine, mass, char_width);
    const double change = std::abs(c_fine - c_coarse);
    if (change > kConvergenceTolerance * std::abs(c_fine) + floor) {
        std::ostringstream os;
        os << "refining the momentum grid changed C by " << change << " (|C| = " << std::abs(c_fine)
           << ")";
        throw QuadratureUnderResolved(os.str());
    }
    return c_fine;
}

CharWidthCalibration calibrate_char_width(const CoordinateSet& c, double k_max, int points) {
    if (points < 2) throw ValidationError("calibration needs at least two points");
    const StateVector psi = optimal_state(c);
    std::vector<double> xs, ys;
    for (int i = 1; i <= points; ++i) {
        // Directions cycle through all four axes and mixed combinations.
        const double t = k_max * i / points;
        Vec4 dir;
        switch (i % 4) {
            case 0: dir = Vec4(1, 0, 0, 0); break;
            case 1: dir = Vec4(0, 1, 1, 0).normalized(); break;
            case 2: dir = Vec4(1, 1, 1, 1).normalized(); break;
            default: dir = Vec4(0, 0, 1, -1).normalized(); break;
        }
        const Vec4 k = t * dir;
        const double g2 = std::norm(characteristic_function(psi, c, WeylExponent{k}));
        xs.push_back(k.squaredNorm());
        ys.push_back(std::log(g2));
    }
    // Through-origin fit: |g(0)|^2 = 1.
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += xs[i] * ys[i];
        sxx += xs[i] * xs[i];
    }
    CharWidthCalibration cal;
    cal.char_width = -sxy / sxx;
    for (std::size_t i = 0; i < xs.size(); ++i)
        cal.residual = std::max(cal.residual, std::abs(ys[i] + cal.char_width * xs[i]));
    return cal;
}

CommutatorCurve locality_violation_profile(const Vec3& direction, const std::vector<double>& r_values,
                                           double mass, const QuadratureSpec& quad,
                                           double time_offset, double char_width) {
    if (r_values.empty()) throw ValidationError("no separations requested");
    for (std::size_t i = 0; i < r_values.size(); ++i) {
        if (!(r_values[i] > 0.0) || (i > 0 && !(r_values[i] > r_values[i - 1])))
            throw ValidationError("r values must be positive and strictly ascending");
    }
    const double norm = direction.norm();
    if (std::abs(norm - 1.0) > 1e-9) throw ValidationError("direction must be a unit vector");

    CommutatorCurve curve;
    curve.mass = mass;
    curve.quadrature = quad;
    for (double r : r_values) {
        Vec4 a;
        a << time_offset, r * direction;
        curve.separations.push_back(a);
        curve.values.push_back(smeared_commutator(a, mass, char_width, quad));
    }

    // Values at roundoff level count as vanishing; no envelope is fitted then.
    const double floor = kConvergenceFloor * weight_scale(build_grid(quad), mass, char_width);
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < r_values.size(); ++i) {
        const double magnitude = std::abs(curve.values[i]);
        if (!(magnitude > floor)) return curve;
        xs.push_back(r_values[i] * r_values[i]);
        ys.push_back(std::log(magnitude));
    }
    if (xs.size() >= 2) {
        const LineFit f = fit_line(xs, ys);
        curve.envelope = EnvelopeFit{std::exp(f.intercept), -f.slope, f.r_squared};
    }
    return curve;
}

std::string to_csv(const CommutatorCurve& curve) {
    std::ostringstream os;
    os << "r,re_C,im_C,abs_C\n";
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
        const double r = curve.separations[i].tail<3>().norm();
        const complex v = curve.values[i];
        const double row[] = {r, v.real(), v.imag(), std::abs(v)};
        os << csv::join(row) << '\n';
    }
    os << "# amplitude,decay,c_r2\n";
    if (curve.envelope) {
        const double fit[] = {curve.envelope->amplitude, curve.envelope->decay,
                              curve.envelope->r_squared};
        os << "# " << csv::join(fit) << '\n';
    } else {
        os << "# nan,nan,nan\n";
    }
    return os.str();
}

CovarianceReport covariance_check(const LorentzTransform& lorentz, const std::vector<Vec4>& test_points,
                                  double mass, const QuadratureSpec& quad, double char_width) {
    if (!lorentz.is_rotation())
        throw UnsupportedTransform("only rotations (proper or improper) are checked; boosts act "
                                   "nontrivially on the center");
    const Mat3 r = lorentz.spatial();
    const MomentumGrid grid = build_grid(quad);
    const MomentumGrid turned = rotate(grid, r);
    CovarianceReport report;
    report.points = test_points.size();
    for (const auto& a : test_points) {
        Vec4 ra = a;
        ra.tail<3>() = r * a.tail<3>();
        const complex base = evaluate_commutator(grid, a, mass, char_width);
        const complex moved = evaluate_commutator(grid, ra, mass, char_width);
        const complex moved_grid = evaluate_commutator(turned, ra, mass, char_width);
        report.max_rotated_separation_deviation =
            std::max(report.max_rotated_separation_deviation, std::abs(moved - base));
        report.max_rotated_grid_deviation =
            std::max(report.max_rotated_grid_deviation, std::abs(moved_grid - base));
    }
    return report;
}

}  // namespace qst
