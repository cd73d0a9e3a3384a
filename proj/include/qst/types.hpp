#pragma once

#include <complex>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace qst {

using complex = std::complex<double>;

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using SparseCMatrix = Eigen::SparseMatrix<complex>;

inline constexpr complex I_unit{0.0, 1.0};

// Minkowski metric diag(+1,-1,-1,-1); raised indices always use it.
inline Mat4 minkowski_metric() {
    return Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
}

}  // namespace qst
