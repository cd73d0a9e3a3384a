#include "qst/sigma_manifold.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "qst/csv.hpp"
#include "qst/errors.hpp"

namespace qst {

namespace {

std::string describe(const Vec3& v) {
    std::ostringstream os;
    os << "(" << v(0) << "," << v(1) << "," << v(2) << ")";
    return os.str();
}

}  // namespace

Mat4 tensor_from_em(const Vec3& e, const Vec3& m) {
    Mat4 s = Mat4::Zero();
    for (int i = 0; i < 3; ++i) {
        s(0, i + 1) = e(i);
        s(i + 1, 0) = -e(i);
    }
    // sigma_23 = m1, sigma_31 = m2, sigma_12 = m3
    s(2, 3) = m(0);
    s(3, 2) = -m(0);
    s(3, 1) = m(1);
    s(1, 3) = -m(1);
    s(1, 2) = m(2);
    s(2, 1) = -m(2);
    return s;
}

void em_from_tensor(const Mat4& s, Vec3& e, Vec3& m) {
    // Antisymmetric part only.
    const Mat4 a = 0.5 * (s - s.transpose());
    e = Vec3(a(0, 1), a(0, 2), a(0, 3));
    m = Vec3(a(2, 3), a(3, 1), a(1, 2));
}

Mat4 SigmaPoint::tensor() const { return tensor_from_em(e_, m_); }

SigmaPoint SigmaPoint::standard(int orientation) {
    const double sign = orientation < 0 ? -1.0 : 1.0;
    return SigmaPoint(Vec3::UnitX(), sign * Vec3::UnitX(), orientation < 0 ? -1 : +1);
}

SigmaPoint make_sigma(const Vec3& e, const Vec3& m, double tol) {
    if (!e.allFinite() || !m.allFinite())
        throw ConstraintViolation("non-finite components");
    const double e2 = e.squaredNorm();
    const double m2 = m.squaredNorm();
    const double scale = std::max(1.0, std::max(e2, m2));
    if (std::abs(e2 - m2) > tol * scale)
        throw ConstraintViolation("|e|^2 != |m|^2 for e=" + describe(e) + ", m=" + describe(m));
    const double dot = e.dot(m);
    if (std::abs(std::abs(dot) - 1.0) > tol * scale)
        throw ConstraintViolation("e.m = " + std::to_string(dot) + " is not +-1");
    return SigmaPoint(e, m, dot > 0 ? +1 : -1);
}

double invariant_qq(const Mat4& s) {
    const Mat4 g = minkowski_metric();
    const Mat4 upper = g * s * g;
    return s.cwiseProduct(upper).sum();
}

double invariant_qq(const SigmaPoint& sigma) {
    return 2.0 * (sigma.m().squaredNorm() - sigma.e().squaredNorm());
}

double invariant_pfaffian(const Mat4& s) {
    return s(0, 1) * s(2, 3) - s(0, 2) * s(1, 3) + s(0, 3) * s(1, 2);
}

double invariant_pfaffian(const SigmaPoint& sigma) { return sigma.e().dot(sigma.m()); }

LorentzTransform::LorentzTransform(const Mat4& matrix, double tol) : matrix_(matrix) {
    if (!matrix.allFinite()) throw InvalidTransform("non-finite entries");
    const Mat4 g = minkowski_metric();
    const double defect = (matrix.transpose() * g * matrix - g).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, matrix.cwiseAbs2().maxCoeff());
    if (defect > tol * scale)
        throw InvalidTransform("metric not preserved (defect " + std::to_string(defect) + ")");
    proper_ = matrix.determinant() > 0.0;
}

LorentzTransform LorentzTransform::identity() { return LorentzTransform(Mat4::Identity()); }

LorentzTransform LorentzTransform::rotation(const Mat3& r) {
    Mat4 l = Mat4::Identity();
    l.bottomRightCorner<3, 3>() = r;
    return LorentzTransform(l);
}

LorentzTransform LorentzTransform::rotation(const Vec3& axis, double angle) {
    return rotation(Mat3(Eigen::AngleAxisd(angle, axis.normalized())));
}

LorentzTransform LorentzTransform::boost(const Vec3& direction, double rapidity) {
    const Vec3 n = direction.normalized();
    const double ch = std::cosh(rapidity);
    const double sh = std::sinh(rapidity);
    Mat4 l = Mat4::Identity();
    l(0, 0) = ch;
    l.block<1, 3>(0, 1) = sh * n.transpose();
    l.block<3, 1>(1, 0) = sh * n;
    l.bottomRightCorner<3, 3>() = Mat3::Identity() + (ch - 1.0) * n * n.transpose();
    return LorentzTransform(l);
}

LorentzTransform LorentzTransform::parity() {
    return LorentzTransform(Vec4(1.0, -1.0, -1.0, -1.0).asDiagonal().toDenseMatrix());
}

bool LorentzTransform::is_rotation(double tol) const {
    return std::abs(matrix_(0, 0) - 1.0) <= tol &&
           matrix_.block<1, 3>(0, 1).cwiseAbs().maxCoeff() <= tol &&
           matrix_.block<3, 1>(1, 0).cwiseAbs().maxCoeff() <= tol;
}

LorentzTransform LorentzTransform::operator*(const LorentzTransform& rhs) const {
    return LorentzTransform(matrix_ * rhs.matrix_, 1e-10);
}

SigmaPoint lorentz_act(const LorentzTransform& lorentz, const SigmaPoint& sigma) {
    const Mat4& l = lorentz.matrix();
    const Mat4 transformed = l * sigma.tensor() * l.transpose();
    Vec3 e, m;
    em_from_tensor(transformed, e, m);
    return make_sigma(e, m, 1e-8);
}

bool is_base_point(const SigmaPoint& sigma, double tol) {
    const Vec3& e = sigma.e();
    const Vec3& m = sigma.m();
    const bool aligned = (e - m).norm() <= tol || (e + m).norm() <= tol;
    return aligned && std::abs(e.norm() - 1.0) <= tol;
}

namespace {

Vec3 random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Vec3 v;
    do {
        for (int i = 0; i < 3; ++i) v(i) = normal(rng);
    } while (v.norm() < 1e-6);
    return v.normalized();
}

}  // namespace

SigmaPoint random_sigma(std::mt19937_64& rng, double max_radius) {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double r = 1.0 + (max_radius - 1.0) * uniform(rng);
    const double cos_angle = 1.0 / (r * r);
    const double sin_angle = std::sqrt(1.0 - cos_angle * cos_angle);
    const Vec3 u = random_unit(rng);
    Vec3 v = random_unit(rng);
    v = (v - v.dot(u) * u);
    if (v.norm() < 1e-6) v = u.unitOrthogonal();
    v.normalize();
    const double sign = uniform(rng) < 0.5 ? -1.0 : 1.0;
    return make_sigma(r * u, sign * r * (cos_angle * u + sin_angle * v));
}

LorentzTransform random_lorentz(std::mt19937_64& rng, double max_rapidity) {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double angle = 2.0 * std::numbers::pi * uniform(rng);
    const auto rot = LorentzTransform::rotation(random_unit(rng), angle);
    const double rapidity = max_rapidity * (2.0 * uniform(rng) - 1.0);
    auto l = rot * LorentzTransform::boost(random_unit(rng), rapidity);
    if (uniform(rng) < 0.5) l = LorentzTransform::parity() * l;
    return l;
}

std::string to_csv(const SigmaPoint& sigma) {
    const Vec3& e = sigma.e();
    const Vec3& m = sigma.m();
    const double values[] = {e(0), e(1), e(2), m(0), m(1), m(2)};
    return csv::join(values);
}

SigmaPoint sigma_from_csv(std::string_view line, double tol) {
    const auto fields = csv::split(line);
    if (fields.size() != 6)
        throw ValidationError("sigma record needs 6 fields, got " + std::to_string(fields.size()));
    Vec3 e, m;
    for (int i = 0; i < 3; ++i) {
        e(i) = csv::parse_double(fields[i]);
        m(i) = csv::parse_double(fields[i + 3]);
    }
    return make_sigma(e, m, tol);
}

std::string to_json(const SigmaPoint& sigma) {
    nlohmann::json j;
    j["e"] = {sigma.e()(0), sigma.e()(1), sigma.e()(2)};
    j["m"] = {sigma.m()(0), sigma.m()(1), sigma.m()(2)};
    return j.dump();
}

SigmaPoint sigma_from_json(std::string_view text, double tol) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError(std::string("sigma json: ") + ex.what());
    }
    auto read = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_array() || j[key].size() != 3)
            throw ValidationError(std::string("sigma json: '") + key + "' must be a 3-array");
        Vec3 v;
        for (int i = 0; i < 3; ++i) v(i) = j[key][i].get<double>();
        return v;
    };
    return make_sigma(read("e"), read("m"), tol);
}

}  // namespace qst
