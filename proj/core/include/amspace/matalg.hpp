#pragma once

#include <Eigen/Dense>

namespace amspace {

// Dense n x n matrix with inline storage, n <= 8.
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 8, 8>;
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 8, 1>;
using Mat2 = Eigen::Matrix2d;
using Vec2 = Eigen::Vector2d;

inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kEigenFloor = 1e-14;

// Symmetric positive definite matrix, validated on construction.
class SpdMatrix {
 public:
  explicit SpdMatrix(const Mat& m);
  const Mat& mat() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

 private:
  Mat m_;
};

struct SymEigen {
  Vec values;
  Mat vectors;  // columns are orthonormal eigenvectors
};

// Cyclic Jacobi rotations; input is symmetrized first.
SymEigen sym_eigen(const Mat& s);

bool is_symmetric(const Mat& m, double rel_tol = kSymmetryTol);
Mat symmetrize(const Mat& m);

Mat mat_exp(const Mat& a);
Mat mat_log(const SpdMatrix& s);
Mat mat_tanh(const Mat& a);
SpdMatrix spd_sqrt(const SpdMatrix& s);
Mat commutator(const Mat& a, const Mat& b);

// 2x2 versions used pointwise on fields.
Mat2 exp2x2(const Mat2& a);
Mat2 sqrt_spd2x2(const Mat2& s);

}  // namespace amspace
