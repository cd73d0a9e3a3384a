#pragma once

// Points of the commutator spectrum Sigma: real antisymmetric 4x4 tensors with
// |e|^2 = |m|^2 and e.m = +-1, where e_i = sigma_{0i} and m_i = eps_{ijk} sigma_{jk} / 2.

#include <random>
#include <string>
#include <string_view>

#include "qst/types.hpp"

namespace qst {

inline constexpr double kSigmaTolerance = 1e-9;

class SigmaPoint {
public:
    const Vec3& e() const { return e_; }
    const Vec3& m() const { return m_; }
    // Sign of e.m, either +1 or -1.
    int orientation() const { return orientation_; }

    // sigma_{0i} = e_i, sigma_{jk} = eps_{jkl} m_l.
    Mat4 tensor() const;

    // The standard symplectic form: sigma_{01} = sigma_{23} = 1.
    static SigmaPoint standard(int orientation = +1);

private:
    friend SigmaPoint make_sigma(const Vec3&, const Vec3&, double);
    SigmaPoint(Vec3 e, Vec3 m, int orientation)
        : e_(std::move(e)), m_(std::move(m)), orientation_(orientation) {}

    Vec3 e_;
    Vec3 m_;
    int orientation_;
};

// Throws ConstraintViolation unless |e|^2 = |m|^2 and e.m = +-1 within tol.
SigmaPoint make_sigma(const Vec3& e, const Vec3& m, double tol = kSigmaTolerance);

// Raw conversions, no validation.
Mat4 tensor_from_em(const Vec3& e, const Vec3& m);
void em_from_tensor(const Mat4& sigma, Vec3& e, Vec3& m);

// Q_{mu nu} Q^{mu nu} = 2 (|m|^2 - |e|^2).
double invariant_qq(const SigmaPoint& sigma);
double invariant_qq(const Mat4& raw_tensor);

// Pf(sigma) = sigma_01 sigma_23 - sigma_02 sigma_13 + sigma_03 sigma_12 = e.m.
double invariant_pfaffian(const SigmaPoint& sigma);
double invariant_pfaffian(const Mat4& raw_tensor);

class LorentzTransform {
public:
    // Throws InvalidTransform unless L^T g L = g within tol.
    explicit LorentzTransform(const Mat4& matrix, double tol = 1e-12);

    static LorentzTransform identity();
    static LorentzTransform rotation(const Vec3& axis, double angle);
    static LorentzTransform rotation(const Mat3& r);
    // rapidity along a unit spatial direction
    static LorentzTransform boost(const Vec3& direction, double rapidity);
    static LorentzTransform parity();

    const Mat4& matrix() const { return matrix_; }
    bool proper() const { return proper_; }
    bool orthochronous() const { return matrix_(0, 0) > 0.0; }
    // True for transforms acting trivially on the time axis.
    bool is_rotation(double tol = 1e-12) const;
    // Spatial 3x3 block.
    Mat3 spatial() const { return matrix_.bottomRightCorner<3, 3>(); }

    LorentzTransform operator*(const LorentzTransform& rhs) const;

private:
    Mat4 matrix_;
    bool proper_;
};

// sigma'_{mu nu} = L_mu^a L_nu^b sigma_{ab}, i.e. L sigma L^T.
SigmaPoint lorentz_act(const LorentzTransform& lorentz, const SigmaPoint& sigma);

// e = +-m with |e| = 1.
bool is_base_point(const SigmaPoint& sigma, double tol = kSigmaTolerance);

// Random valid point: |e| = |m| = r >= 1 with the angle between them fixed by e.m = +-1.
SigmaPoint random_sigma(std::mt19937_64& rng, double max_radius = 4.0);
// Random rotation times a boost with rapidity in [-max_rapidity, max_rapidity],
// composed with parity half of the time.
LorentzTransform random_lorentz(std::mt19937_64& rng, double max_rapidity = 2.0);

// Flat record "e1,e2,e3,m1,m2,m3".
std::string to_csv(const SigmaPoint& sigma);
SigmaPoint sigma_from_csv(std::string_view line, double tol = kSigmaTolerance);

// {"e":[...],"m":[...]}
std::string to_json(const SigmaPoint& sigma);
SigmaPoint sigma_from_json(std::string_view text, double tol = kSigmaTolerance);

}  // namespace qst
