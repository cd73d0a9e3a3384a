// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qst/field_commutator.hpp"
#include "qst/kernels.hpp"
#include "qst/localization.hpp"
#include "qst/multi_event.hpp"
#include "qst/quadrature.hpp"
#include "qst/sigma_manifold.hpp"

using namespace qst;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) ok = false;
        if (!detail.empty()) detail += "; ";
        detail += what + (cond ? "" : " [violated]");
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

int failures = 0;

void criterion(int id, const char* name, double time_limit, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail += std::string(o.detail.empty() ? "" : "; ") + "exception: " + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(elapsed < time_limit, "runtime " + num(elapsed) + " s < " + num(time_limit) + " s");
    if (!o.ok) ++failures;
    std::printf("%s criterion %d (%s): %s\n", o.ok ? "PASS" : "FAIL", id, name, o.detail.c_str());
    std::fflush(stdout);
}

Vec4 uniform4(std::mt19937_64& rng, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Vec4 v;
    for (int i = 0; i < 4; ++i) v(i) = u(rng);
    return v;
}

// Independent oracles for the kernel transform: direct quadrature of the density.

complex two_point_quadrature(const KernelSpec& spec, const Vec4& k1, const Vec4& k2) {
    // Gauss-Hermite weight exp(-|x|^2) is the w = 1/2 kernel Gaussian on x2 = -x1.
    const auto rule = quad::gauss_hermite(24);
    const Vec4 dk = k1 - k2;
    const std::size_t m = rule.size();
    complex total = 0.0;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t d = 0; d < m; ++d) {
                    const Vec4 x(rule.nodes[a], rule.nodes[b], rule.nodes[c], rule.nodes[d]);
                    const double w = rule.weights[a] * rule.weights[b] * rule.weights[c] * rule.weights[d];
                    total += w * kernel_density(spec, complete_on_surface({x})) * std::exp(x.squaredNorm()) *
                             std::exp(I_unit * dk.dot(x));
                }
    return total;
}

complex three_point_quadrature(const KernelSpec& spec, const std::vector<Vec4>& k) {
    // Factorizes over components; 2D trapezoid per component.
    const int n = 241;
    const double lo = -10.0, h = 20.0 / (n - 1);
    complex product = spec.normalization;
    for (int mu = 0; mu < 4; ++mu) {
        complex sum = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec4 x1 = Vec4::Zero(), x2 = Vec4::Zero();
                x1(mu) = lo + h * i;
                x2(mu) = lo + h * j;
                const auto pts = complete_on_surface({x1, x2});
                const double phase = k[0](mu) * x1(mu) + k[1](mu) * x2(mu) + k[2](mu) * pts[2](mu);
                sum += kernel_density(spec, pts) / spec.normalization * std::exp(I_unit * phase);
            }
        product *= sum * h * h;
    }
    return product;
}

}  // namespace

int main() {
    criterion(1, "single-event minimal length", 5.0, [](Outcome& o) {
        const auto levels = euclidean_length_spectrum(build_coordinates(32), 1);
        o.require(std::abs(levels[0] - 2.0) < 1e-8, "lowest eigenvalue " + num(levels[0]) + ", |dev| " +
                                                      num(std::abs(levels[0] - 2.0)) + " < 1e-8");
    });

    criterion(2, "two-event minimal distance", 60.0, [](Outcome& o) {
        const auto p = build_pair(6);
        const double nm = pair_distance_spectrum(p, 1, DistanceMethod::normal_mode)[0];
        o.require(std::abs(nm - 4.0) < 1e-8, "normal_mode |dev| " + num(std::abs(nm - 4.0)) + " < 1e-8");
        const double bf = pair_distance_spectrum(p, 1, DistanceMethod::brute_force)[0];
        o.require(std::abs(bf - 4.0) < 1e-6, "brute_force |dev| " + num(std::abs(bf - 4.0)) + " < 1e-6");
    });

    criterion(3, "quantum conditions", 1.0, [](Outcome& o) {
        std::mt19937_64 rng(2024);
        double worst_qq = 0.0, worst_pf = 0.0;
        auto record = [&](const SigmaPoint& s) {
            const Mat4 t = s.tensor();
            worst_qq = std::max(worst_qq, std::abs(invariant_qq(t)));
            worst_pf = std::max(worst_pf, std::abs(std::abs(invariant_pfaffian(t)) - 1.0));
        };
        for (int i = 0; i < 500; ++i) record(random_sigma(rng));
        for (int i = 0; i < 100; ++i) record(lorentz_act(random_lorentz(rng), SigmaPoint::standard()));
        o.require(worst_qq < 1e-10, "max |QQ| " + num(worst_qq) + " < 1e-10");
        o.require(worst_pf < 1e-10, "max ||Pf|-1| " + num(worst_pf) + " < 1e-10");
    });

    criterion(4, "Weyl relation convergence", 30.0, [](Outcome& o) {
        // Below this the residual is double-precision roundoff and no longer ordered.
        constexpr double kRoundoffFloor = 1e-13;
        std::mt19937_64 rng(77);
        std::vector<std::pair<Vec4, Vec4>> pairs;
        for (int i = 0; i < 8; ++i) {
            Vec4 a = uniform4(rng, 1.0), b = uniform4(rng, 1.0);
            if (a.norm() > 1.0) a.normalize();
            if (b.norm() > 1.0) b.normalize();
            pairs.emplace_back(a, b);
        }
        std::vector<double> residuals;
        std::string series;
        for (int n : {8, 16, 32, 64, 128}) {
            const auto c = build_coordinates(n);
            const CVector psi = ground_state(n).coefficients();
            double worst = 0.0;
            for (const auto& [a, b] : pairs)
                worst = std::max(worst, weyl_composition_residual(c, {a}, {b}, psi));
            residuals.push_back(worst);
            series += (series.empty() ? "" : ",") + num(worst);
        }
        bool monotone = true;
        for (std::size_t i = 1; i < residuals.size(); ++i) {
            const bool both_at_floor = residuals[i] < kRoundoffFloor && residuals[i - 1] < kRoundoffFloor;
            if (!(residuals[i] < residuals[i - 1]) && !both_at_floor) monotone = false;
        }
        o.require(monotone, "residuals N=8..128 [" + series + "] decrease (ties below 1e-13 roundoff)");
        o.require(residuals.back() < 1e-8, "N=128 residual < 1e-8");
    });

    criterion(5, "uncertainty relations", 30.0, [](Outcome& o) {
        const auto c = build_coordinates(24);
        const auto reports = sample_uncertainties(c, 10000, 12345);
        const auto floor = summarize(reports);
        o.require(floor.min_time_space > 0.4, "min dq0*sum dqj " + num(floor.min_time_space) + " > 0.4");
        o.require(floor.min_space_space > 0.4, "min sum dqj dqk " + num(floor.min_space_space) + " > 0.4");
        o.require(floor.min_sum_of_squares >= 2.0 - 1e-6,
                  "min sum dq^2 " + num(floor.min_sum_of_squares) + " >= 2 - 1e-6");
        const auto g = uncertainties(ground_state(24), c);
        o.require(std::abs(g.product_time_space - 1.5) < 1e-8 && std::abs(g.product_space_space - 1.5) < 1e-8,
                  "ground-state products " + num(g.product_time_space) + ", " + num(g.product_space_space) +
                      " = 3/2 within 1e-8");
    });

    criterion(6, "kernel oracle equivalence", 60.0, [](Outcome& o) {
        std::mt19937_64 rng(606);
        KernelSpec two;
        KernelSpec three;
        three.arity = 3;
        double worst2 = 0.0, worst3 = 0.0;
        for (int i = 0; i < 20; ++i) {
            const Vec4 k1 = uniform4(rng, 1.0), k2 = uniform4(rng, 1.0);
            const complex exact = kernel_fourier(two, {k1, k2});
            worst2 = std::max(worst2, std::abs(exact - two_point_quadrature(two, k1, k2)) / std::abs(exact));
        }
        for (int i = 0; i < 20; ++i) {
            const std::vector<Vec4> k = {uniform4(rng, 1.0), uniform4(rng, 1.0), uniform4(rng, 1.0)};
            const complex exact = kernel_fourier(three, k);
            worst3 = std::max(worst3, std::abs(exact - three_point_quadrature(three, k)) / std::abs(exact));
        }
        o.require(worst2 < 1e-6, "n=2 max rel err " + num(worst2) + " < 1e-6");
        o.require(worst3 < 1e-6, "n=3 max rel err " + num(worst3) + " < 1e-6");
        const double pi2 = std::numbers::pi * std::numbers::pi;
        const double surface = kernel_total_integral(two);
        o.require(std::abs(surface - two.normalization * pi2) < 1e-8 * pi2,
                  "n=2 surface integral " + num(surface) + " = c2 pi^2 within 1e-8 rel");
    });

    criterion(7, "locality-violation profile", 120.0, [](Outcome& o) {
        const double t = kDefaultTimeOffset;
        const complex at2 = smeared_commutator(Vec4(t, 2.0, 0, 0), 0.0);
        o.require(std::abs(at2) > 1e-12, "|C(a0=" + num(t) + ", r=2)| " + num(std::abs(at2)) + " > 1e-12");
        std::vector<double> rs;
        for (int i = 0; i <= 12; ++i) rs.push_back(1.0 + 0.25 * i);
        const auto curve = locality_violation_profile(Vec3::UnitX(), rs, 0.0);
        if (!curve.envelope) {
            o.require(false, "envelope fit");
        } else {
            o.require(curve.envelope->r_squared > 0.99, "fit R^2 " + num(curve.envelope->r_squared) + " > 0.99");
            o.require(curve.envelope->decay > 0.0, "decay c " + num(curve.envelope->decay) + " > 0");
        }
        const std::vector<Vec4> pts = {Vec4(t, 2, 0, 0), Vec4(t, 1, 1, 0.5), Vec4(-t, 0.3, -1.4, 2.0)};
        double anti = 0.0;
        for (const auto& a : pts)
            anti = std::max(anti, std::abs(smeared_commutator(a, 0.0) + smeared_commutator(-a, 0.0)));
        o.require(anti < 1e-6, "antisymmetry dev " + num(anti) + " < 1e-6");
        const auto cov = covariance_check(LorentzTransform::rotation(Vec3(1, 2, 3), 0.9), pts);
        o.require(cov.max_deviation() < 1e-6, "rotation covariance dev " + num(cov.max_deviation()) + " < 1e-6");
    });

    criterion(8, "quantum diagonal map", 10.0, [](Outcome& o) {
        const auto p = build_pair(8);
        const auto reduced = quantum_diagonal_reduce(p, pair_distance_operator(p));
        const Eigen::Index d = reduced.matrix.rows();
        const double dev = (reduced.matrix - 4.0 * CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
        o.require(dev < 1e-8, "difference length -> 4*1, max dev " + num(dev) + " < 1e-8");
        const auto b = barycenter_coordinates(p);
        const auto single = build_coordinates(reduced.dim_per_mode);
        double worst = 0.0;
        for (int mu = 0; mu < 4; ++mu)
            worst = std::max(worst, (quantum_diagonal_reduce(p, b.q(mu)).matrix - CMatrix(single.q(mu)))
                                        .cwiseAbs()
                                        .maxCoeff());
        o.require(worst < 1e-12, "barycenter -> single-event coordinates, max dev " + num(worst));
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
