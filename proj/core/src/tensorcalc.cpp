#include "amspace/tensorcalc.hpp"

#include <array>
#include <cmath>

#include "amspace/errors.hpp"

namespace amspace {

Gamma2& Gamma2::operator+=(const Gamma2& o) {
  for (int k = 0; k < 8; ++k) (&v[0][0][0])[k] += (&o.v[0][0][0])[k];
  return *this;
}
Gamma2& Gamma2::operator-=(const Gamma2& o) {
  for (int k = 0; k < 8; ++k) (&v[0][0][0])[k] -= (&o.v[0][0][0])[k];
  return *this;
}
Gamma2& Gamma2::operator*=(double s) {
  for (int k = 0; k < 8; ++k) (&v[0][0][0])[k] *= s;
  return *this;
}
double Gamma2::max_abs() const {
  double m = 0.0;
  for (int k = 0; k < 8; ++k) m = std::max(m, std::abs((&v[0][0][0])[k]));
  return m;
}

DiffRule DiffRule::for_grid(const Grid& g) {
  DiffRule r;
  if (g.chart() == Chart::sphere) r.axis2 = DiffMethod::wide;
  return r;
}

namespace {

template <class T>
std::array<Field<T>, 2> grad_of(const Field<T>& f, const DiffRule& rule) {
  return {partial(f, 1, rule.axis1), partial(f, 2, rule.axis2)};
}

Gamma2 gamma_point(const Mat2& gi, const std::array<Mat2, 2>& dg) {
  Gamma2 G;
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double s = 0.0;
        for (int l = 0; l < 2; ++l) s += gi(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        G(k, i, j) = 0.5 * s;
      }
  return G;
}

// Riemann tensor R^a_{bcd} = d_c G^a_{db} - d_d G^a_{cb} + G^a_{ce} G^e_{db} - G^a_{de} G^e_{cb},
// with derivatives of Gamma from first and second derivatives of g.
struct Riemann {
  double r[2][2][2][2];
};

struct MetricJets {
  std::array<MField, 2> dg;
  std::array<std::array<MField, 2>, 2> ddg;
};

MetricJets jets(const MField& g, const DiffRule& rule) {
  auto dg = grad_of(g, rule);
  MField d01 = partial(dg[0], 2, rule.axis2);
  MField d00 = partial2(g, 1, rule.axis1);
  MField d11 = partial2(g, 2, rule.axis2);
  return MetricJets{dg, {{{d00, d01}, {d01, d11}}}};
}

Riemann riemann_point(const Mat2& g, const MetricJets& J, int k) {
  const Mat2 gi = g.inverse();
  const std::array<Mat2, 2> dg = {J.dg[0][k], J.dg[1][k]};
  const Gamma2 G = gamma_point(gi, dg);
  // dG[c](a, d, b) = d_c Gamma^a_db
  Gamma2 dG[2];
  for (int c = 0; c < 2; ++c) {
    const Mat2 dgi = -gi * dg[c] * gi;
    for (int a = 0; a < 2; ++a)
      for (int d = 0; d < 2; ++d)
        for (int b = 0; b < 2; ++b) {
          double s = 0.0;
          for (int l = 0; l < 2; ++l) {
            const double S = dg[d](b, l) + dg[b](d, l) - dg[l](d, b);
            const double dS = J.ddg[c][d][k](b, l) + J.ddg[c][b][k](d, l) - J.ddg[c][l][k](d, b);
            s += dgi(a, l) * S + gi(a, l) * dS;
          }
          dG[c](a, d, b) = 0.5 * s;
        }
  }
  Riemann R{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          double s = dG[c](a, d, b) - dG[d](a, c, b);
          for (int e = 0; e < 2; ++e) s += G(a, c, e) * G(e, d, b) - G(a, d, e) * G(e, c, b);
          R.r[a][b][c][d] = s;
        }
  return R;
}

// nabla_j h_ab for all (j, a, b)
struct FormJet {
  double v[2][2][2];
};

FormJet covariant_form_derivative(const Mat2& h, const std::array<Mat2, 2>& dh, const Gamma2& G) {
  FormJet out{};
  for (int j = 0; j < 2; ++j)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        double s = dh[j](a, b);
        for (int c = 0; c < 2; ++c) s -= G(c, j, a) * h(c, b) + G(c, j, b) * h(a, c);
        out.v[j][a][b] = s;
      }
  return out;
}

}  // namespace

GammaField christoffels(const MField& g, const DiffRule& rule) {
  const auto dg = grad_of(g, rule);
  GammaField out(g.grid());
  for (int k = 0; k < g.size(); ++k) out[k] = gamma_point(g[k].inverse(), {dg[0][k], dg[1][k]});
  return out;
}

RField gaussian_curvature(const MField& g, const DiffRule& rule) {
  const MetricJets J = jets(g, rule);
  RField K(g.grid());
  for (int k = 0; k < g.size(); ++k) {
    const Riemann R = riemann_point(g[k], J, k);
    double r1212 = 0.0;
    for (int a = 0; a < 2; ++a) r1212 += g[k](0, a) * R.r[a][1][0][1];
    K[k] = r1212 / g[k].determinant();
  }
  return K;
}

RField scalar_curvature(const MField& g, const DiffRule& rule) { return 2.0 * gaussian_curvature(g, rule); }

MField ricci(const MField& g, const DiffRule& rule) {
  const MetricJets J = jets(g, rule);
  MField out(g.grid());
  for (int k = 0; k < g.size(); ++k) {
    const Riemann R = riemann_point(g[k], J, k);
    Mat2 ric;
    for (int b = 0; b < 2; ++b)
      for (int d = 0; d < 2; ++d) ric(b, d) = R.r[0][b][0][d] + R.r[1][b][1][d];
    out[k] = 0.5 * (ric + ric.transpose());
  }
  return out;
}

MField aric(const AssocPair& p, const DiffRule& rule) {
  const MField ric = ricci(p.g, rule);
  MField out(ric.grid());
  for (int k = 0; k < ric.size(); ++k) out[k] = 0.5 * (ric[k] - p.J[k].transpose() * ric[k] * p.J[k]);
  return out;
}

MField lie_metric(const VField& X, const MField& g, const DiffRule& rule) {
  require_same_grid(X.grid(), g.grid());
  const auto dg = grad_of(g, rule);
  const auto dX = grad_of(X, rule);
  MField out(g.grid());
  for (int k = 0; k < g.size(); ++k) {
    // DX(k, i) = d_i X^k
    Mat2 DX;
    DX.col(0) = dX[0][k];
    DX.col(1) = dX[1][k];
    const Mat2 m = X[k](0) * dg[0][k] + X[k](1) * dg[1][k] + DX.transpose() * g[k] + g[k] * DX;
    out[k] = 0.5 * (m + m.transpose());
  }
  return out;
}

VField divergence_form(const MField& h, const MField& g, const DiffRule& rule) {
  require_same_grid(h.grid(), g.grid());
  const GammaField G = christoffels(g, rule);
  const auto dh = grad_of(h, rule);
  VField out(g.grid());
  for (int k = 0; k < g.size(); ++k) {
    const Mat2 gi = g[k].inverse();
    const FormJet D = covariant_form_derivative(h[k], {dh[0][k], dh[1][k]}, G[k]);
    Vec2 v = Vec2::Zero();
    for (int i = 0; i < 2; ++i)
      for (int a = 0; a < 2; ++a)
        for (int j = 0; j < 2; ++j)
          for (int b = 0; b < 2; ++b) v(i) -= gi(i, a) * gi(j, b) * D.v[j][a][b];
    out[k] = v;
  }
  return out;
}

RField sqrt_det(const MField& g) {
  return map(g, [](const Mat2& m) { return std::sqrt(m.determinant()); });
}

RField vector_divergence(const VField& X, const MField& g, const DiffRule& rule) {
  require_same_grid(X.grid(), g.grid());
  const RField s = sqrt_det(g);
  const VField sX = zip(s, X, [](double a, const Vec2& v) { return Vec2(a * v); });
  const auto d = grad_of(sX, rule);
  RField out(g.grid());
  for (int k = 0; k < g.size(); ++k) out[k] = (d[0][k](0) + d[1][k](1)) / s[k];
  return out;
}

VField gradient(const RField& F, const MField& g, const DiffRule& rule) {
  require_same_grid(F.grid(), g.grid());
  const auto d = grad_of(F, rule);
  VField out(g.grid());
  for (int k = 0; k < g.size(); ++k) out[k] = g[k].inverse() * Vec2(d[0][k], d[1][k]);
  return out;
}

RField double_divergence(const MField& h, const MField& g, const DiffRule& rule) {
  return -vector_divergence(divergence_form(h, g, rule), g, rule);
}

GammaField box_operator(const MField& a, const MField& g, const DiffRule& rule) {
  require_same_grid(a.grid(), g.grid());
  const GammaField G = christoffels(g, rule);
  const auto da = grad_of(a, rule);
  GammaField out(g.grid());
  for (int p = 0; p < g.size(); ++p) {
    const Mat2 gi = g[p].inverse();
    const FormJet D = covariant_form_derivative(a[p], {da[0][p], da[1][p]}, G[p]);
    Gamma2 B;
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          double s = 0.0;
          for (int l = 0; l < 2; ++l) s += gi(k, l) * (D.v[i][j][l] + D.v[j][i][l] - D.v[l][i][j]);
          B(k, i, j) = 0.5 * s;
        }
    out[p] = B;
  }
  return out;
}

RField vector_dot(const VField& X, const VField& Y, const MField& g) {
  require_same_grid(X.grid(), Y.grid());
  require_same_grid(X.grid(), g.grid());
  RField out(g.grid());
  for (int k = 0; k < g.size(); ++k) out[k] = X[k].dot(g[k] * Y[k]);
  return out;
}

RField form_dot(const MField& a, const MField& b, const MField& g) {
  require_same_grid(a.grid(), b.grid());
  require_same_grid(a.grid(), g.grid());
  RField out(g.grid());
  for (int k = 0; k < g.size(); ++k) {
    const Mat2 gi = g[k].inverse();
    out[k] = (gi * a[k] * gi * b[k]).trace();
  }
  return out;
}

double total_scalar(const MField& g, const DiffRule& rule) {
  const RField r = scalar_curvature(g, rule);
  const RField s = sqrt_det(g);
  return integrate(zip(r, s, [](double a, double b) { return a * b; }));
}

double gradient_pairing(const MField& g, const MField& h, const DiffRule& rule) {
  require_same_grid(g.grid(), h.grid());
  const MetricJets J = jets(g, rule);
  RField f(g.grid());
  for (int k = 0; k < g.size(); ++k) {
    const Riemann R = riemann_point(g[k], J, k);
    Mat2 ric;
    for (int b = 0; b < 2; ++b)
      for (int d = 0; d < 2; ++d) ric(b, d) = R.r[0][b][0][d] + R.r[1][b][1][d];
    const Mat2 gi = g[k].inverse();
    const double r = (gi * ric).trace();
    const Mat2 grad = 0.5 * r * g[k] - 0.5 * (ric + ric.transpose());
    f[k] = (gi * grad * gi * h[k]).trace() * std::sqrt(g[k].determinant());
  }
  return integrate(f);
}

#define AMSPACE_DEFAULT_RULE_1(ret, name, T1) \
  ret name(const T1& a) { return name(a, DiffRule::for_grid(a.grid())); }
#define AMSPACE_DEFAULT_RULE_2(ret, name, T1, T2) \
  ret name(const T1& a, const T2& b) { return name(a, b, DiffRule::for_grid(a.grid())); }

AMSPACE_DEFAULT_RULE_1(GammaField, christoffels, MField)
AMSPACE_DEFAULT_RULE_1(RField, gaussian_curvature, MField)
AMSPACE_DEFAULT_RULE_1(RField, scalar_curvature, MField)
AMSPACE_DEFAULT_RULE_1(MField, ricci, MField)
AMSPACE_DEFAULT_RULE_1(double, total_scalar, MField)
AMSPACE_DEFAULT_RULE_2(MField, lie_metric, VField, MField)
AMSPACE_DEFAULT_RULE_2(VField, divergence_form, MField, MField)
AMSPACE_DEFAULT_RULE_2(RField, vector_divergence, VField, MField)
AMSPACE_DEFAULT_RULE_2(VField, gradient, RField, MField)
AMSPACE_DEFAULT_RULE_2(RField, double_divergence, MField, MField)
AMSPACE_DEFAULT_RULE_2(GammaField, box_operator, MField, MField)
AMSPACE_DEFAULT_RULE_2(double, gradient_pairing, MField, MField)

MField aric(const AssocPair& p) { return aric(p, DiffRule::for_grid(p.g.grid())); }

}  // namespace amspace
