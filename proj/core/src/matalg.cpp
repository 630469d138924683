#include "amspace/matalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "amspace/errors.hpp"

namespace amspace {
namespace {

void require_square(const Mat& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DimensionError(std::string(what) + ": matrix is not square");
  }
}

void require_finite(const Mat& m, const char* what) {
  if (!m.allFinite()) throw DomainError(std::string(what) + ": non-finite entry");
}

template <class F>
Mat apply_spectral(const SymEigen& e, F f) {
  const int n = static_cast<int>(e.values.size());
  Vec d(n);
  for (int i = 0; i < n; ++i) d(i) = f(e.values(i));
  Mat out = e.vectors * d.asDiagonal() * e.vectors.transpose();
  return symmetrize(out);
}

// sinh(x)/x and sin(x)/x with series near zero.
double sinhc(double x) {
  if (std::abs(x) < 1e-4) return 1.0 + x * x / 6.0 + x * x * x * x / 120.0;
  return std::sinh(x) / x;
}
double sinc(double x) {
  if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0 + x * x * x * x / 120.0;
  return std::sin(x) / x;
}

Mat exp_taylor(const Mat& a) {
  const int n = static_cast<int>(a.rows());
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  if (norm1 > 0.5) s = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  const Mat b = a / std::ldexp(1.0, s);
  Mat term = Mat::Identity(n, n);
  Mat sum = Mat::Identity(n, n);
  for (int k = 1; k <= 24; ++k) {
    term = term * b / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18 * sum.cwiseAbs().maxCoeff()) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

}  // namespace

bool is_symmetric(const Mat& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

Mat symmetrize(const Mat& m) { return 0.5 * (m + m.transpose()); }

SpdMatrix::SpdMatrix(const Mat& m) {
  require_square(m, "SpdMatrix");
  require_finite(m, "SpdMatrix");
  if (!is_symmetric(m)) throw DomainError("SpdMatrix: matrix is not symmetric");
  m_ = symmetrize(m);
  const double tr = m_.trace();
  const SymEigen e = sym_eigen(m_);
  if (!(tr > 0.0) || e.values.minCoeff() <= kEigenFloor * tr) {
    throw DomainError("SpdMatrix: matrix is not positive definite");
  }
}

SymEigen sym_eigen(const Mat& s) {
  require_square(s, "sym_eigen");
  const int n = static_cast<int>(s.rows());
  Mat a = symmetrize(s);
  Mat v = Mat::Identity(n, n);
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off <= 1e-36 * std::max(a.squaredNorm(), 1e-300)) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }
  SymEigen out;
  out.values = a.diagonal();
  out.vectors = v;
  return out;
}

Mat2 exp2x2(const Mat2& a) {
  const double mu = 0.5 * a.trace();
  Mat2 a0 = a;
  a0(0, 0) -= mu;
  a0(1, 1) -= mu;
  // a0^2 = theta2 * I for traceless a0.
  const double theta2 = -a0.determinant();
  double c, s;
  if (theta2 >= 0) {
    const double th = std::sqrt(theta2);
    c = std::cosh(th);
    s = sinhc(th);
  } else {
    const double th = std::sqrt(-theta2);
    c = std::cos(th);
    s = sinc(th);
  }
  return std::exp(mu) * (c * Mat2::Identity() + s * a0);
}

Mat2 sqrt_spd2x2(const Mat2& s) {
  const double rd = std::sqrt(s.determinant());
  const double denom = std::sqrt(s.trace() + 2.0 * rd);
  Mat2 r = (s + rd * Mat2::Identity()) / denom;
  return 0.5 * (r + r.transpose());
}

Mat mat_exp(const Mat& a) {
  require_square(a, "mat_exp");
  require_finite(a, "mat_exp");
  if (a.rows() == 2) return Mat(exp2x2(Mat2(a)));
  if (is_symmetric(a)) return apply_spectral(sym_eigen(a), [](double x) { return std::exp(x); });
  return exp_taylor(a);
}

Mat mat_log(const SpdMatrix& s) {
  return apply_spectral(sym_eigen(s.mat()), [](double x) { return std::log(x); });
}

Mat mat_tanh(const Mat& a) {
  require_square(a, "mat_tanh");
  require_finite(a, "mat_tanh");
  if (is_symmetric(a)) return apply_spectral(sym_eigen(a), [](double x) { return std::tanh(x); });
  const Mat ep = mat_exp(a);
  const Mat em = mat_exp(-a);
  return (ep + em).partialPivLu().solve(ep - em);
}

SpdMatrix spd_sqrt(const SpdMatrix& s) {
  if (s.dim() == 2) return SpdMatrix(Mat(sqrt_spd2x2(Mat2(s.mat()))));
  return SpdMatrix(apply_spectral(sym_eigen(s.mat()), [](double x) { return std::sqrt(x); }));
}

Mat commutator(const Mat& a, const Mat& b) {
  require_square(a, "commutator");
  require_square(b, "commutator");
  if (a.rows() != b.rows()) throw DimensionError("commutator: dimension mismatch");
  return a * b - b * a;
}

}  // namespace amspace
