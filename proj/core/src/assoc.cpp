#include "amspace/assoc.hpp"

#include <cmath>
#include <sstream>

#include "amspace/errors.hpp"

namespace amspace {

namespace {

const Mat2 kI = Mat2::Identity();

double rel(const Mat2& d, const Mat2& ref) { return d.norm() / std::max(ref.norm(), 1e-300); }

std::string where(const Grid& g, int k) {
  std::ostringstream os;
  os << "(" << g.x1(k / g.n2()) << ", " << g.x2(k % g.n2()) << ")";
  return os.str();
}

void require_positive(const MField& P, const char* what) {
  int worst = -1;
  double wv = 0.0;
  for (int k = 0; k < P.size(); ++k) {
    // P^2 = -det(P) I for a traceless g0-symmetric operator
    const double r2 = -P[k].determinant();
    if (!(r2 < 1.0) && (worst < 0 || r2 > wv)) {
      worst = k;
      wv = r2;
    }
  }
  if (worst >= 0) {
    std::ostringstream os;
    os << what << ": 1 - P^2 is not positive; worst point " << where(P.grid(), worst) << " with |p|^2 = " << wv;
    throw DomainError(os.str());
  }
}

}  // namespace

const Mat2& omega() {
  static const Mat2 w = (Mat2() << 0.0, 1.0, -1.0, 0.0).finished();
  return w;
}

AssocPair base_pair(const Grid& grid) {
  AssocPair p{MField(grid), MField(grid)};
  for (int i = 0; i < grid.n1(); ++i) {
    for (int j = 0; j < grid.n2(); ++j) {
      if (grid.chart() == Chart::torus) {
        p.g(i, j) = kI;
        p.J(i, j) << 0.0, -1.0, 1.0, 0.0;
      } else {
        const double z = grid.x2(j);
        const double s2 = 1.0 - z * z;
        p.g(i, j) << s2, 0.0, 0.0, 1.0 / s2;
        p.J(i, j) << 0.0, -1.0 / s2, s2, 0.0;
      }
    }
  }
  return p;
}

MField frame_field(const Grid& grid) {
  MField e(grid, kI);
  if (grid.chart() == Chart::sphere) {
    for (int i = 0; i < grid.n1(); ++i) {
      for (int j = 0; j < grid.n2(); ++j) {
        const double s = std::sqrt(1.0 - grid.x2(j) * grid.x2(j));
        e(i, j) << 1.0 / s, 0.0, 0.0, s;
      }
    }
  }
  return e;
}

Mat2 complex_to_on(cplx c) {
  Mat2 m;
  m << c.real(), -c.imag(), -c.imag(), -c.real();
  return m;
}

cplx on_to_complex(const Mat2& m) { return cplx(0.5 * (m(0, 0) - m(1, 1)), -0.5 * (m(0, 1) + m(1, 0))); }

MField complex_to_operator(const CField& c) {
  const MField e = frame_field(c.grid());
  MField out(c.grid());
  for (int k = 0; k < c.size(); ++k) out[k] = e[k] * complex_to_on(c[k]) * e[k].inverse();
  return out;
}

CField operator_to_complex(const MField& x) {
  const MField e = frame_field(x.grid());
  CField out(x.grid());
  for (int k = 0; k < x.size(); ++k) out[k] = on_to_complex(e[k].inverse() * x[k] * e[k]);
  return out;
}

MField alpha_to_form(const CField& alpha) {
  const AssocPair b = base_pair(alpha.grid());
  const MField A = complex_to_operator(alpha);
  MField h(alpha.grid());
  for (int k = 0; k < h.size(); ++k) {
    const Mat2 m = b.g[k] * A[k];
    h[k] = 0.5 * (m + m.transpose());
  }
  return h;
}

double PairDefects::max() const { return std::max({j_square, hermitian, omega, det}); }

PairDefects pair_defects(const AssocPair& p) {
  require_same_grid(p.g.grid(), p.J.grid());
  PairDefects d;
  for (int k = 0; k < p.g.size(); ++k) {
    const Mat2& g = p.g[k];
    const Mat2& J = p.J[k];
    d.j_square = std::max(d.j_square, (J * J + kI).norm());
    d.hermitian = std::max(d.hermitian, rel(J.transpose() * g * J - g, g));
    d.omega = std::max(d.omega, rel(g - omega() * J, g));
    d.det = std::max(d.det, std::abs(g.determinant() - 1.0));
  }
  return d;
}

double tangent_defect(const MField& h, const AssocPair& p) {
  require_same_grid(h.grid(), p.g.grid());
  // relative to sup |h|: pointwise ratios blow up at zeros of h
  double herm = 0.0, trace = 0.0, hmax = 0.0;
  for (int k = 0; k < h.size(); ++k) {
    hmax = std::max(hmax, h[k].norm());
    herm = std::max(herm, (p.J[k].transpose() * h[k] * p.J[k] + h[k]).norm());
    trace = std::max(trace, std::abs(p.g[k].inverse().cwiseProduct(h[k]).sum()));
  }
  if (hmax == 0.0) return 0.0;
  return std::max(herm, trace) / hmax;
}

double cayley_radius2(const MField& P) {
  double r = 0.0;
  for (int k = 0; k < P.size(); ++k) r = std::max(r, -P[k].determinant());
  return r;
}

AssocPair cayley_to_pair(const MField& P, const AssocPair& base) {
  require_same_grid(P.grid(), base.g.grid());
  require_positive(P, "cayley_to_pair");
  AssocPair out{MField(P.grid()), MField(P.grid())};
  for (int k = 0; k < P.size(); ++k) {
    const Mat2 S = (kI + P[k]) * (kI - P[k]).inverse();
    const Mat2 g = base.g[k] * S;
    out.g[k] = 0.5 * (g + g.transpose());
    out.J[k] = base.J[k] * S;
  }
  return out;
}

MField cayley_from_pair(const MField& J, const AssocPair& base) {
  require_same_grid(J.grid(), base.J.grid());
  MField P(J.grid());
  for (int k = 0; k < J.size(); ++k) {
    const Mat2 jj = J[k] * base.J[k];
    const Mat2 m = kI - jj;
    if (std::abs(m.determinant()) < 1e-12 * std::max(1.0, m.squaredNorm())) {
      std::ostringstream os;
      os << "cayley_from_pair: 1 - J J0 is singular at " << where(J.grid(), k)
         << "; J is not a positive associated structure";
      throw DomainError(os.str());
    }
    P[k] = m.inverse() * (kI + jj);
  }
  return P;
}

MField tangent_push(const MField& A, const MField& P, const AssocPair& base) {
  require_same_grid(A.grid(), P.grid());
  require_positive(P, "tangent_push");
  MField h(A.grid());
  for (int k = 0; k < A.size(); ++k) {
    const Mat2 q = (kI - P[k]).inverse();
    const Mat2 m = 2.0 * base.g[k] * q * A[k] * q;
    h[k] = 0.5 * (m + m.transpose());
  }
  return h;
}

MField tangent_pull(const MField& h, const MField& P, const AssocPair& base) {
  require_same_grid(h.grid(), P.grid());
  require_positive(P, "tangent_pull");
  MField A(h.grid());
  for (int k = 0; k < h.size(); ++k) {
    const Mat2 S = (kI + P[k]) * (kI - P[k]).inverse();
    const Mat2 g = base.g[k] * S;
    A[k] = 0.5 * (kI - P[k]).inverse() * (kI - P[k] * P[k]) * g.inverse() * h[k] * (kI - P[k]);
  }
  return A;
}

MField acs_on_am(const MField& h, const MField& J) {
  require_same_grid(h.grid(), J.grid());
  MField out(h.grid());
  for (int k = 0; k < h.size(); ++k) out[k] = h[k] * J[k];
  return out;
}

double fundamental_form(const MField& a, const MField& b, const AssocPair& at) {
  require_same_grid(a.grid(), b.grid());
  require_same_grid(a.grid(), at.g.grid());
  RField ab(a.grid()), ba(a.grid());
  for (int k = 0; k < a.size(); ++k) {
    const Mat2 gi = at.g[k].inverse();
    const Mat2 A = gi * a[k], B = gi * b[k];
    ab[k] = (A * at.J[k] * B).trace();
    ba[k] = (B * at.J[k] * A).trace();
  }
  // antisymmetrized so that swapping the arguments flips the sign exactly
  return 0.5 * (integrate(ab) - integrate(ba));
}

AssocPair project_to_associated(const MField& gp) {
  AssocPair out{MField(gp.grid()), MField(gp.grid())};
  for (int k = 0; k < gp.size(); ++k) {
    const Mat2& m = gp[k];
    if (!(m.determinant() > 0.0) || !(m.trace() > 0.0) || !m.allFinite()) {
      std::ostringstream os;
      os << "project_to_associated: metric is singular or not positive at " << where(gp.grid(), k);
      throw DomainError(os.str());
    }
    const Mat2 A = -m.inverse() * omega();
    const Mat2 negA2 = -A * A;
    const Mat2 H = sqrt_spd2x2(0.5 * (negA2 + negA2.transpose()));
    const Mat2 Hi = H.inverse();
    out.J[k] = A * Hi;
    const Mat2 g = m * H;
    out.g[k] = 0.5 * (g + g.transpose());
  }
  return out;
}

MField fiber_transport(const MField& g0p, const MField& P) {
  require_same_grid(g0p.grid(), P.grid());
  require_positive(P, "fiber_transport");
  MField out(P.grid());
  for (int k = 0; k < P.size(); ++k) {
    const Mat2 S = (kI + P[k]) * (kI - P[k]).inverse();
    out[k] = 0.5 * (S.transpose() * g0p[k] + g0p[k] * S);
    if (!(out[k].determinant() > 0.0 && out[k].trace() > 0.0)) {
      throw DomainError("fiber_transport: transported metric lost positivity at " + where(P.grid(), k));
    }
  }
  return out;
}

MField fiber_transport_inverse(const MField& gp, const MField& P) {
  require_same_grid(gp.grid(), P.grid());
  require_positive(P, "fiber_transport_inverse");
  MField out(P.grid());
  for (int k = 0; k < P.size(); ++k) {
    const Mat2 Si = (kI - P[k]) * (kI + P[k]).inverse();
    out[k] = 0.5 * (Si.transpose() * gp[k] + gp[k] * Si);
  }
  return out;
}

CField beltrami_apply(const CField& f, const CField& p, DiffMethod method) {
  require_same_grid(f.grid(), p.grid());
  const Grid& g = f.grid();
  const CField f1 = partial(f, 1, method);
  const CField f2 = partial(f, 2, method);
  CField out(g);
  const cplx I(0.0, 1.0);
  for (int i = 0; i < g.n1(); ++i) {
    for (int j = 0; j < g.n2(); ++j) {
      // d/d(eta) with eta the conformal coordinate paired with axis1
      double s2 = 1.0;
      if (g.chart() == Chart::sphere) s2 = 1.0 - g.x2(j) * g.x2(j);
      const cplx dx = f1(i, j), dy = s2 * f2(i, j);
      const cplx dw = 0.5 * (dx - I * dy);
      const cplx dwbar = 0.5 * (dx + I * dy);
      out(i, j) = dwbar - std::conj(p(i, j)) * dw;
    }
  }
  return out;
}

}  // namespace amspace
