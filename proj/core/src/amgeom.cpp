#include "amspace/amgeom.hpp"

#include <cmath>

#include "amspace/errors.hpp"

namespace amspace {

namespace {

const Mat2 kI = Mat2::Identity();

Mat2 comm(const Mat2& a, const Mat2& b) { return a * b - b * a; }

double gram_sectional(double num, double aa, double bb, double ab) {
  const double gram = aa * bb - ab * ab;
  if (!(gram > 1e-10 * aa * bb)) throw DegenerateError("sectional curvature: plane is degenerate");
  return num / gram;
}

MField operators(const MField& h, const AssocPair& at) {
  require_same_grid(h.grid(), at.g.grid());
  MField A(h.grid());
  for (int k = 0; k < h.size(); ++k) A[k] = at.g[k].inverse() * h[k];
  return A;
}

// (1 - P^2)^{-1}
MField resolvent(const MField& P) {
  MField out(P.grid());
  for (int k = 0; k < P.size(); ++k) {
    const Mat2 m = kI - P[k] * P[k];
    if (!(m.determinant() > 0.0 && m.trace() > 0.0)) throw DomainError("chart: 1 - P^2 is not positive");
    out[k] = m.inverse();
  }
  return out;
}

}  // namespace

double am_inner(const MField& a, const MField& b, const AssocPair& at) {
  require_same_grid(a.grid(), b.grid());
  const MField A = operators(a, at), B = operators(b, at);
  RField f(a.grid());
  for (int k = 0; k < f.size(); ++k) f[k] = (A[k] * B[k]).trace();
  return integrate(f);
}

MField am_curvature(const MField& a, const MField& b, const MField& c, const AssocPair& at) {
  const MField A = operators(a, at), B = operators(b, at), C = operators(c, at);
  MField r(a.grid());
  for (int k = 0; k < r.size(); ++k) {
    const Mat2 m = -0.25 * at.g[k] * comm(comm(A[k], B[k]), C[k]);
    r[k] = 0.5 * (m + m.transpose());
  }
  return r;
}

double am_sectional(const MField& a, const MField& b, const AssocPair& at) {
  const MField A = operators(a, at), B = operators(b, at);
  RField num(a.grid()), aa(a.grid()), bb(a.grid()), ab(a.grid());
  for (int k = 0; k < num.size(); ++k) {
    const Mat2 c = comm(A[k], B[k]);
    num[k] = 0.25 * (c * c).trace();
    aa[k] = (A[k] * A[k]).trace();
    bb[k] = (B[k] * B[k]).trace();
    ab[k] = (A[k] * B[k]).trace();
  }
  return gram_sectional(integrate(num), integrate(aa), integrate(bb), integrate(ab));
}

double am_holomorphic_sectional(const MField& a, const AssocPair& at) {
  if (am_inner(a, a, at) <= 0.0) throw DegenerateError("holomorphic sectional curvature of the zero vector");
  return am_sectional(a, acs_on_am(a, at.J), at);
}

AssocPair am_geodesic(const AssocPair& at, const MField& a, double t) {
  const MField A = operators(a, at);
  AssocPair out{MField(a.grid()), MField(a.grid())};
  for (int k = 0; k < a.size(); ++k) {
    const Mat2 e = exp2x2(t * A[k]);
    const Mat2 g = at.g[k] * e;
    out.g[k] = 0.5 * (g + g.transpose());
    out.J[k] = at.J[k] * e;
  }
  return out;
}

double chart_inner(const MField& A, const MField& B, const MField& P) {
  require_same_grid(A.grid(), B.grid());
  require_same_grid(A.grid(), P.grid());
  const MField R = resolvent(P);
  RField f(A.grid());
  for (int k = 0; k < f.size(); ++k) f[k] = 4.0 * (R[k] * A[k] * R[k] * B[k]).trace();
  return integrate(f);
}

MField chart_curvature(const MField& A, const MField& B, const MField& C, const MField& P) {
  const MField R = resolvent(P);
  MField out(A.grid());
  for (int k = 0; k < out.size(); ++k) {
    const Mat2 q = kI - P[k] * P[k];
    out[k] = -q * comm(comm(R[k] * A[k], R[k] * B[k]), R[k] * C[k]);
  }
  return out;
}

double chart_sectional(const MField& A, const MField& B, const MField& P) {
  const MField r = chart_curvature(A, B, B, P);
  return gram_sectional(chart_inner(r, A, P), chart_inner(A, A, P), chart_inner(B, B, P), chart_inner(A, B, P));
}

double chart_fundamental_form(const MField& A, const MField& B, const MField& P, const AssocPair& base) {
  const MField R = resolvent(P);
  RField ab(A.grid()), ba(A.grid());
  for (int k = 0; k < ab.size(); ++k) {
    ab[k] = 4.0 * (R[k] * A[k] * base.J[k] * R[k] * B[k]).trace();
    ba[k] = 4.0 * (R[k] * B[k] * base.J[k] * R[k] * A[k]).trace();
  }
  return 0.5 * (integrate(ab) - integrate(ba));
}

MField chart_geodesic(const MField& A, double t) {
  MField out(A.grid());
  for (int k = 0; k < out.size(); ++k) {
    out[k] = Mat2(mat_tanh(Mat(t * A[k])));
  }
  return out;
}

double complex_inner(const CField& alpha, const CField& beta) {
  const RField f = zip(alpha, beta, [](cplx a, cplx b) { return 2.0 * (a * std::conj(b)).real(); });
  return integrate(f);
}

double complex_sectional(const CField& alpha, const CField& beta) {
  const RField num = zip(alpha, beta, [](cplx a, cplx b) {
    const double im = (a * std::conj(b)).imag();
    return -2.0 * im * im;
  });
  return gram_sectional(integrate(num), complex_inner(alpha, alpha), complex_inner(beta, beta),
                        complex_inner(alpha, beta));
}

}  // namespace amspace
