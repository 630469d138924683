#include "amspace/pointgeom.hpp"

#include <cmath>
#include <sstream>

#include "amspace/errors.hpp"

namespace amspace {
namespace {

void require_tangent(const Mat& x, int n, const char* what) {
  if (x.rows() != n || x.cols() != n) throw DimensionError(std::string(what) + ": dimension mismatch");
  if (!x.allFinite()) throw DomainError(std::string(what) + ": non-finite entry");
  if (!is_symmetric(x)) throw DomainError(std::string(what) + ": tangent vector is not symmetric");
}

Mat reference_of(const WeakStructure& s, int n) {
  if (s.reference) {
    if (s.reference->dim() != n) throw DimensionError("reference metric dimension mismatch");
    return s.reference->mat();
  }
  return Mat::Identity(n, n);
}

double density(const WeakStructure& s, const SpdMatrix& g) {
  const Mat ref = reference_of(s, g.dim());
  return std::sqrt(g.mat().determinant() / ref.determinant());
}

double tr(const Mat& m) { return m.trace(); }

// Symmetric-looking matrices built from products drift by roundoff.
Mat sym(const Mat& m) { return symmetrize(m); }

// x - (tr X / n) g
Mat traceless(const Mat& x, const Mat& xop, const Mat& g) {
  return x - (tr(xop) / static_cast<double>(g.rows())) * g;
}

// Connection term Gamma(a,b) so that nabla_a b = db_a + Gamma(a,b).
Mat gamma(const WeakStructure& s, const SpdMatrix& gs, const Mat& a, const Mat& b) {
  const Mat& g = gs.mat();
  const int n = gs.dim();
  const auto lu = g.partialPivLu();
  const Mat A = lu.solve(a);
  const Mat B = lu.solve(b);
  const Mat hom = -0.5 * (a * B + b * A);
  switch (s.kind) {
    case StructureKind::flat:
      return Mat::Zero(n, n);
    case StructureKind::homogeneous:
      return sym(hom);
    case StructureKind::canonical:
      return sym(hom + 0.25 * (tr(A) * b + tr(B) * a - tr(A * B) * g));
    case StructureKind::dewitt: {
      const double al = s.alpha;
      return sym(hom + 0.25 * (tr(A) * b + tr(B) * a) -
                 (tr(A * B) + al * tr(A) * tr(B)) / (4.0 * (1.0 + al * n)) * g);
    }
    case StructureKind::non_riemannian:
      return sym(hom + 0.125 * (tr(A) * b + tr(B) * a));
    case StructureKind::conformally_flat: {
      const Mat g0 = reference_of(s, n);
      const auto lu0 = g0.partialPivLu();
      const Mat A0 = lu0.solve(a);
      const Mat B0 = lu0.solve(b);
      // g0 G with G = g^{-1} g0
      const Mat g0G = g0 * lu.solve(g0);
      return sym(0.25 * (tr(A) * b + tr(B) * a) - 0.25 * tr(A0 * B0) * g0G);
    }
  }
  throw UnsupportedError("unknown structure");
}

}  // namespace

std::string to_string(StructureKind k) {
  switch (k) {
    case StructureKind::flat: return "flat";
    case StructureKind::conformally_flat: return "conformally-flat";
    case StructureKind::homogeneous: return "homogeneous";
    case StructureKind::dewitt: return "dewitt";
    case StructureKind::non_riemannian: return "non-riemannian";
    case StructureKind::canonical: return "canonical";
  }
  return "?";
}

void validate(const WeakStructure& s, int n) {
  if (!std::isfinite(s.alpha)) throw DomainError("structure parameter is not finite");
  const bool uses_alpha = s.kind == StructureKind::flat || s.kind == StructureKind::dewitt ||
                          s.kind == StructureKind::homogeneous;
  if (uses_alpha && std::abs(1.0 + s.alpha * n) < 1e-14) {
    throw DomainError("structure is degenerate for alpha = -1/n");
  }
  if (s.reference && s.reference->dim() != n) throw DimensionError("reference metric dimension mismatch");
}

Mat covariant_derivative(const WeakStructure& s, const SpdMatrix& g, const Mat& a, const Mat& b,
                         const Mat& db_a) {
  const int n = g.dim();
  validate(s, n);
  require_tangent(a, n, "covariant_derivative");
  require_tangent(b, n, "covariant_derivative");
  require_tangent(db_a, n, "covariant_derivative");
  return db_a + gamma(s, g, a, b);
}

Mat curvature_tensor(const WeakStructure& s, const SpdMatrix& gs, const Mat& a, const Mat& b, const Mat& c) {
  const int n = gs.dim();
  validate(s, n);
  require_tangent(a, n, "curvature_tensor");
  require_tangent(b, n, "curvature_tensor");
  require_tangent(c, n, "curvature_tensor");
  const Mat& g = gs.mat();
  const auto lu = g.partialPivLu();
  const Mat A = lu.solve(a), B = lu.solve(b), C = lu.solve(c);
  const Mat hom = -0.25 * g * commutator(commutator(A, B), C);
  const double nn = static_cast<double>(n);
  switch (s.kind) {
    case StructureKind::flat:
      return Mat::Zero(n, n);
    case StructureKind::homogeneous:
      return sym(hom);
    case StructureKind::canonical:
      return sym(hom - tr(C) * (tr(A) * b - tr(B) * a) / 16.0 +
                 nn / 16.0 * (tr(A * C) * traceless(b, B, g) - tr(B * C) * traceless(a, A, g)));
    case StructureKind::dewitt: {
      const double al = s.alpha;
      const double ac = tr(A * C) + al * tr(A) * tr(C);
      const double bc = tr(B * C) + al * tr(B) * tr(C);
      return sym(hom - tr(C) * (tr(A) * b - tr(B) * a) / 16.0 +
                 nn / (16.0 * (1.0 + al * nn)) * (ac * traceless(b, B, g) - bc * traceless(a, A, g)));
    }
    case StructureKind::non_riemannian:
      return sym(hom - (tr(A) * b - tr(B) * a) * tr(C) / 64.0);
    case StructureKind::conformally_flat: {
      // Derived from the connection by direct differentiation; see notes.
      const Mat g0 = reference_of(s, n);
      const auto lu0 = g0.partialPivLu();
      const Mat G = lu.solve(g0);
      const Mat N = g0 * G;  // g0 g^{-1} g0
      auto ip0 = [&](const Mat& x, const Mat& y) { return tr(lu0.solve(x) * lu0.solve(y)); };
      auto T = [&](const Mat& x, const Mat& y) {
        return Mat(0.25 * tr(lu.solve(x)) * y + 0.25 * tr(lu.solve(y)) * x - 0.25 * ip0(x, y) * N);
      };
      const Mat d = -0.25 * tr(A * C) * b + 0.25 * tr(B * C) * a +
                    0.25 * (ip0(b, c) * g0 * A * G - ip0(a, c) * g0 * B * G);
      return sym(d + T(a, T(b, c)) - T(b, T(a, c)));
    }
  }
  throw UnsupportedError("unknown structure");
}

double inner_product_point(const WeakStructure& s, const SpdMatrix& gs, const Mat& a, const Mat& b) {
  const int n = gs.dim();
  validate(s, n);
  require_tangent(a, n, "inner_product_point");
  require_tangent(b, n, "inner_product_point");
  const auto lu = gs.mat().partialPivLu();
  const Mat A = lu.solve(a), B = lu.solve(b);
  switch (s.kind) {
    case StructureKind::flat: {
      const auto lu0 = reference_of(s, n).partialPivLu();
      const Mat A0 = lu0.solve(a), B0 = lu0.solve(b);
      return tr(A0 * B0) + s.alpha * tr(A0) * tr(B0);
    }
    case StructureKind::conformally_flat: {
      const auto lu0 = reference_of(s, n).partialPivLu();
      return tr(lu0.solve(a) * lu0.solve(b)) * density(s, gs);
    }
    case StructureKind::homogeneous:
      return tr(A * B) + s.alpha * tr(A) * tr(B);
    case StructureKind::canonical:
      return tr(A * B) * density(s, gs);
    case StructureKind::dewitt:
      return (tr(A * B) + s.alpha * tr(A) * tr(B)) * density(s, gs);
    case StructureKind::non_riemannian:
      throw UnsupportedError("the non-Riemannian connection has no metric inner product");
  }
  throw UnsupportedError("unknown structure");
}

double sectional_curvature_point(const WeakStructure& s, const SpdMatrix& g, const Mat& a, const Mat& b) {
  const double aa = inner_product_point(s, g, a, a);
  const double bb = inner_product_point(s, g, b, b);
  const double ab = inner_product_point(s, g, a, b);
  const double gram = aa * bb - ab * ab;
  if (!(std::abs(gram) > 1e-10 * std::abs(aa * bb))) {
    throw DegenerateError("sectional_curvature_point: a and b are linearly dependent");
  }
  const Mat r = curvature_tensor(s, g, a, b, b);
  return inner_product_point(s, g, r, a) / gram;
}

namespace {

// g0^{1/2} exp(M) g0^{1/2} where m is symmetric in the g0^{-1/2} frame.
struct Frame {
  Mat half, inv_half;
  explicit Frame(const SpdMatrix& g0) {
    const SymEigen e = sym_eigen(g0.mat());
    const int n = g0.dim();
    Vec d(n), di(n);
    for (int i = 0; i < n; ++i) {
      d(i) = std::sqrt(e.values(i));
      di(i) = 1.0 / d(i);
    }
    half = e.vectors * d.asDiagonal() * e.vectors.transpose();
    inv_half = e.vectors * di.asDiagonal() * e.vectors.transpose();
  }
  Mat to_frame(const Mat& a) const { return symmetrize(inv_half * a * inv_half); }
  SpdMatrix from_exp(const Mat& m) const { return SpdMatrix(symmetrize(half * mat_exp(m) * half)); }
};

std::string blowup_message(const char* what, double tstar) {
  std::ostringstream os;
  os.precision(17);
  os << what << ": t is outside the geodesic's interval (blow-up at t = " << tstar << ")";
  return os.str();
}

// Canonical closed form with v scaled by 1/(1 + alpha n); alpha = 0 is the canonical case.
SpdMatrix canonical_like(const SpdMatrix& g0, const Mat& a0, double t, double alpha) {
  const int n = g0.dim();
  const double nn = n;
  if (1.0 + alpha * nn <= 0.0) {
    throw UnsupportedError("geodesic_point: DeWitt structure with 1 + alpha n < 0 is indefinite");
  }
  const Frame f(g0);
  const Mat m = f.to_frame(a0);  // same trace and spectrum as A
  const double ta = m.trace();
  const Mat mt = m - (ta / nn) * Mat::Identity(n, n);
  const double v = (mt * mt).trace() / (1.0 + alpha * nn);
  const double q = 1.0 + t * ta / 4.0;
  double beta;
  if (v <= 1e-300) {
    if (q <= 0.0) throw DomainError(blowup_message("geodesic_point", -4.0 / ta));
    beta = t / q;
  } else {
    const double w = std::sqrt(nn * v);
    beta = 4.0 / w * std::atan2(w * t, 4.0 + t * ta);
  }
  const double al = 2.0 / nn * std::log(q * q + nn * v / 16.0 * t * t);
  return f.from_exp(al * Mat::Identity(n, n) + beta * mt);
}

}  // namespace

SpdMatrix geodesic_point(const WeakStructure& s, const SpdMatrix& g0, const Mat& a0, double t) {
  const int n = g0.dim();
  validate(s, n);
  require_tangent(a0, n, "geodesic_point");
  if (!std::isfinite(t)) throw DomainError("geodesic_point: t is not finite");
  if (a0.isZero(0.0)) return g0;
  switch (s.kind) {
    case StructureKind::flat: {
      // g0 + t a0 leaves the cone when 1 + t lambda = 0.
      const Frame f(g0);
      const SymEigen e = sym_eigen(f.to_frame(a0));
      for (int i = 0; i < n; ++i) {
        const double lam = e.values(i);
        if (1.0 + t * lam <= 0.0) throw DomainError(blowup_message("geodesic_point", -1.0 / lam));
      }
      return SpdMatrix(g0.mat() + t * a0);
    }
    case StructureKind::homogeneous: {
      const Frame f(g0);
      return f.from_exp(t * f.to_frame(a0));
    }
    case StructureKind::canonical:
      return canonical_like(g0, a0, t, 0.0);
    case StructureKind::dewitt:
      return canonical_like(g0, a0, t, s.alpha);
    case StructureKind::non_riemannian: {
      const Frame f(g0);
      const Mat m = f.to_frame(a0);
      const double beta = m.trace() / 4.0;
      const Mat bt = m - (m.trace() / n) * Mat::Identity(n, n);
      if (beta == 0.0) return f.from_exp(t * bt);
      const double q = 1.0 + beta * t;
      if (q <= 0.0) throw DomainError(blowup_message("geodesic_point", -1.0 / beta));
      const double lq = std::log(q);
      return f.from_exp((4.0 / n) * lq * Mat::Identity(n, n) + (lq / beta) * bt);
    }
    case StructureKind::conformally_flat:
      throw UnsupportedError("geodesic_point: no closed-form geodesic for the conformally-flat structure");
  }
  throw UnsupportedError("unknown structure");
}

double canonical_volume_factor(const SpdMatrix& g0, const Mat& a0, double t) {
  const int n = g0.dim();
  require_tangent(a0, n, "canonical_volume_factor");
  const Mat A = g0.mat().partialPivLu().solve(a0);
  const double ta = A.trace();
  const Mat At = A - (ta / n) * Mat::Identity(n, n);
  const double q = 1.0 + t * ta / 4.0;
  const double r2 = n * (At * At).trace() / 16.0;
  return q * q + r2 * t * t;
}

double fd_geodesic_residual(const WeakStructure& s, const SpdMatrix& g0, const Mat& a0, double t, double dt) {
  if (dt <= 0.0) dt = 1e-3 / (1.0 + a0.norm());
  const Mat gm = geodesic_point(s, g0, a0, t - dt).mat();
  const SpdMatrix gc = geodesic_point(s, g0, a0, t);
  const Mat gp = geodesic_point(s, g0, a0, t + dt).mat();
  const Mat v = symmetrize((gp - gm) / (2.0 * dt));
  const Mat acc = symmetrize((gp - 2.0 * gc.mat() + gm) / (dt * dt));
  return covariant_derivative(s, gc, v, v, acc).norm();
}

Mat fd_curvature(const WeakStructure& s, const SpdMatrix& g, const Mat& a, const Mat& b, const Mat& c,
                 double h) {
  const int n = g.dim();
  validate(s, n);
  const Mat zero = Mat::Zero(n, n);
  // nabla_x (nabla_y z) for constant y, z.
  auto nested = [&](const Mat& x, const Mat& y, const Mat& z) {
    const SpdMatrix gp(g.mat() + h * x);
    const SpdMatrix gm(g.mat() - h * x);
    const Mat w = covariant_derivative(s, g, y, z, zero);
    const Mat dw = symmetrize((covariant_derivative(s, gp, y, z, zero) - covariant_derivative(s, gm, y, z, zero)) /
                              (2.0 * h));
    return Mat(covariant_derivative(s, g, x, w, dw));
  };
  return nested(a, b, c) - nested(b, a, c);
}

namespace {

ConvergenceReport make_report(double e1, double e2, double floor) {
  ConvergenceReport r;
  r.err_h = e1;
  r.err_h2 = e2;
  r.exact = e1 <= floor && e2 <= floor;
  r.order = (e1 > 0.0 && e2 > 0.0) ? std::log2(e1 / e2) : 0.0;
  return r;
}

}  // namespace

ConvergenceReport fd_curvature_check(const WeakStructure& s, const SpdMatrix& g, const Mat& a, const Mat& b,
                                     const Mat& c, double h) {
  const Mat r = curvature_tensor(s, g, a, b, c);
  const double e1 = (fd_curvature(s, g, a, b, c, h) - r).norm();
  const double e2 = (fd_curvature(s, g, a, b, c, h / 2) - r).norm();
  return make_report(e1, e2, 1e-11 * (1.0 + r.norm()));
}

ConvergenceReport fd_geodesic_check(const WeakStructure& s, const SpdMatrix& g0, const Mat& a0, double t,
                                    double dt) {
  if (dt <= 0.0) dt = 0.05 / (1.0 + a0.norm());
  const double e1 = fd_geodesic_residual(s, g0, a0, t, dt);
  const double e2 = fd_geodesic_residual(s, g0, a0, t, dt / 2);
  // second differences lose about eps |g| / dt^2 to cancellation
  const double gnorm = geodesic_point(s, g0, a0, t).mat().norm();
  return make_report(e1, e2, 1e3 * 2.2e-16 * gnorm * 4.0 / (dt * dt));
}

double q_form(const SpdMatrix& g, const Mat& a, const Mat& b) {
  const auto lu = g.mat().partialPivLu();
  return lu.solve(a).trace() * lu.solve(b).trace() * std::sqrt(g.mat().determinant());
}

double q_leibniz_residual(const SpdMatrix& g, const Mat& x, const Mat& b, const Mat& c, double h) {
  const WeakStructure s = WeakStructure::non_riemannian();
  const int n = g.dim();
  const Mat zero = Mat::Zero(n, n);
  const double dq = (q_form(SpdMatrix(g.mat() + h * x), b, c) - q_form(SpdMatrix(g.mat() - h * x), b, c)) / (2.0 * h);
  const double rhs = q_form(g, covariant_derivative(s, g, x, b, zero), c) +
                     q_form(g, b, covariant_derivative(s, g, x, c, zero));
  return std::abs(dq - rhs);
}

}  // namespace amspace
