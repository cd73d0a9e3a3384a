#pragma once

// c-number commutator of the free scalar field smeared with an optimally
// localized state and its translate by a:
//
//   C(a) = [phi(w), phi(w)_a]
//        = (2 pi)^{-3} int dOmega_m(k) |g(k)|^2 (exp(-i k.a) - exp(i k.a)),
//
// with k.a = k0 a0 - vec k . vec a, k0 = sqrt(|vec k|^2 + m^2),
// dOmega_m = d^3k / (2 k0) and g the characteristic function of the state.
// For the oscillator ground state |g|^2 = exp(-w sum_mu k_mu^2) with w = 1/2.

#include <optional>
#include <string>
#include <vector>

#include "qst/localization.hpp"
#include "qst/sigma_manifold.hpp"

namespace qst {

struct QuadratureSpec {
    double k_max = 8.0;
    int radial_nodes = 64;
    int polar_nodes = 48;
    int azimuth_nodes = 48;

    // Throws ValidationError for fewer than 16 nodes per dimension.
    void validate() const;
    QuadratureSpec refined() const;
};

// Product grid in spherical coordinates: Gauss-Legendre in |k| on [0, k_max] and in
// cos(theta), periodic trapezoid in phi. Weights include k^2.
struct MomentumGrid {
    std::vector<Vec3> nodes;
    std::vector<double> weights;
};

MomentumGrid build_grid(const QuadratureSpec& quad);
MomentumGrid rotate(const MomentumGrid& grid, const Mat3& rotation);

inline constexpr double kOptimalCharWidth = 0.5;

// One quadrature pass, no convergence check.
complex evaluate_commutator(const MomentumGrid& grid, const Vec4& a, double mass,
                            double char_width = kOptimalCharWidth);

// Evaluates on quad and on its refinement (every node count doubled) and returns
// the refined value. Throws QuadratureUnderResolved if the two differ by more than
// 1e-4 relative.
complex smeared_commutator(const Vec4& a, double mass, double char_width = kOptimalCharWidth,
                           const QuadratureSpec& quad = {});

struct CharWidthCalibration {
    double char_width = 0.0;
    // max |log|g(k)|^2 + w sum k^2| over the calibration points
    double residual = 0.0;
};

// Fits |g(k)|^2 = exp(-w sum k_mu^2) to the matrix characteristic function of the
// optimal state of c, on momenta with |k| <= k_max.
CharWidthCalibration calibrate_char_width(const CoordinateSet& c, double k_max = 2.0,
                                          int points = 24);

struct EnvelopeFit {
    double amplitude = 0.0;
    double decay = 0.0;  // c in log|C| = A - c r^2
    double r_squared = 0.0;
};

struct CommutatorCurve {
    std::vector<Vec4> separations;
    std::vector<complex> values;
    double mass = 0.0;
    QuadratureSpec quadrature;
    // Absent when some |C| vanishes (e.g. at equal times).
    std::optional<EnvelopeFit> envelope;
};

inline constexpr double kDefaultTimeOffset = 0.5;

// Separations a = (time_offset, r * direction). At time_offset = 0 the commutator
// vanishes identically by k -> -k symmetry of the weight, so the default uses a
// fixed nonzero time component; every point with r > |time_offset| is spacelike.
CommutatorCurve locality_violation_profile(const Vec3& direction, const std::vector<double>& r_values,
                                           double mass, const QuadratureSpec& quad = {},
                                           double time_offset = kDefaultTimeOffset,
                                           double char_width = kOptimalCharWidth);

// "r,re_C,im_C,abs_C" rows, then "# amplitude,decay,c_r2" and the fit values as
// comment rows.
std::string to_csv(const CommutatorCurve& curve);

struct CovarianceReport {
    std::size_t points = 0;
    // max |C(R a) - C(a)| on the fixed grid
    double max_rotated_separation_deviation = 0.0;
    // max |C_{R grid}(R a) - C(a)|
    double max_rotated_grid_deviation = 0.0;

    double max_deviation() const {
        return std::max(max_rotated_separation_deviation, max_rotated_grid_deviation);
    }
};

// Rotations only, proper or improper. Throws UnsupportedTransform for boosts.
CovarianceReport covariance_check(const LorentzTransform& lorentz, const std::vector<Vec4>& test_points,
                                  double mass = 0.0, const QuadratureSpec& quad = {},
                                  double char_width = kOptimalCharWidth);

}  // namespace qst
