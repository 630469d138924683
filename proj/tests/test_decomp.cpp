#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "amspace/amgeom.hpp"
#include "amspace/decomp.hpp"
#include "amspace/errors.hpp"
#include "gen.hpp"

using namespace amspace;
using std::numbers::pi;

namespace {

double sup_diff(const MField& a, const MField& b) {
  double e = 0.0;
  for (int k = 0; k < a.size(); ++k) e = std::max(e, (a[k] - b[k]).norm());
  return e;
}

double sup_mat(const MField& a) {
  double e = 0.0;
  for (const auto& m : a.values()) e = std::max(e, m.norm());
  return e;
}

double sup_vec(const VField& a) {
  double e = 0.0;
  for (const auto& v : a.values()) e = std::max(e, v.norm());
  return e;
}

MField form(const Grid& g, const std::function<cplx(double, double)>& alpha) { return alpha_to_form(sample(g, alpha)); }

// h = [[u, -v], [-v, -u]]
MField uv_form(const RField& u, const RField& v) {
  return zip(u, v, [](double a, double b) { return Mat2((Mat2() << a, -b, -b, -a).finished()); });
}

MField random_symmetric(std::mt19937_64& rng, const Grid& t) {
  const RField u = gen::band_limited_real(rng, t, 6, 4), v = gen::band_limited_real(rng, t, 6, 4),
               w = gen::band_limited_real(rng, t, 6, 4);
  MField h(t);
  for (int q = 0; q < t.size(); ++q) h[q] << u[q], v[q], v[q], w[q];
  return h;
}

MField random_anti_hermitian(std::mt19937_64& rng, const Grid& t) {
  return alpha_to_form(gen::band_limited(rng, t, 6, 4));
}

}  // namespace

TEST(EOperator, Examples) {
  const Grid t = Grid::torus(32, 32);
  const RField c = sample(t, [](double x, double y) { return std::cos(x + y); });
  EXPECT_LT(sup_norm(e_apply(c) - 2.0 * c), 1e-12);
  EXPECT_LT(sup_norm(e_apply(RField(t, 3.0))), 1e-13);
  EXPECT_LT(sup_norm(e_inverse(2.0 * c) - c), 1e-13);
  EXPECT_THROW(e_inverse(RField(t, 1.0)), KernelError);
  EXPECT_THROW(e_apply(RField(Grid::sphere(8, 8))), UnsupportedError);
}

TEST(EOperator, InverseOnZeroMeanProperty) {
  std::mt19937_64 rng(501);
  for (int rep = 0; rep < 20; ++rep) {
    const Grid t = Grid::torus(64, 64);
    RField f = gen::band_limited_real(rng, t, 6, 10);
    f -= RField(t, integrate(f) / (4 * pi * pi));
    EXPECT_LT(sup_norm(e_apply(e_inverse(f)) - f), 1e-12 * (1 + sup_norm(f)));
  }
}

TEST(EOperator, FactorizationMatchesBiharmonic) {
  std::mt19937_64 rng(502);
  for (int rep = 0; rep < 10; ++rep) {
    const Grid t = Grid::torus(128, 128);
    const RField f = gen::band_limited_real(rng, t, 6, 6);
    const RField e = e_apply(f);
    EXPECT_LT(sup_norm(e_factorized(f) - e), 1e-9 * (1 + sup_norm(e)));
  }
  const Grid t = Grid::torus(64, 64);
  const RField c = sample(t, [](double x, double y) { return std::cos(x + y); });
  EXPECT_LT(sup_norm(e_factorized(c) - 2.0 * c), 1e-9);
}

TEST(HorizontalResidual, TorusExamples) {
  const Grid t = Grid::torus(64, 64);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_LT(sup_norm(horizontal_residual(form(t, [&](double x, double) { return cplx(std::cos(k * x), 0); }))), 1e-11);
    EXPECT_LT(sup_norm(horizontal_residual(form(t, [&](double x, double) { return cplx(std::sin(k * x), 0); }))), 1e-11);
    EXPECT_LT(sup_norm(horizontal_residual(form(t, [&](double, double y) { return cplx(std::cos(k * y), 0); }))), 1e-11);
    EXPECT_LT(sup_norm(horizontal_residual(form(t, [&](double x, double y) { return cplx(0, std::cos(k * (x + y))); }))),
              1e-10);
    EXPECT_LT(sup_norm(horizontal_residual(form(t, [&](double x, double y) { return cplx(0, std::cos(k * (x - y))); }))),
              1e-10);
  }
  // v = cos(p x + q y): residual v_xx - v_yy = (q^2 - p^2) v
  const int p = 1, q = 2;
  const RField v = sample(t, [&](double x, double y) { return std::cos(p * x + q * y); });
  const RField r = horizontal_residual(uv_form(RField(t), v));
  EXPECT_LT(sup_norm(r - double(q * q - p * p) * v), 1e-11);
  // u part: 2 u_xy
  const RField u = sample(t, [](double x, double y) { return std::sin(x) * std::sin(2 * y); });
  const RField ru = horizontal_residual(uv_form(u, RField(t)));
  EXPECT_LT(sup_norm(ru - sample(t, [](double x, double y) { return 4 * std::cos(x) * std::cos(2 * y); })), 1e-11);
}

TEST(HorizontalResidual, SphereConstants) {
  const Grid s = Grid::sphere(64, 128);
  auto band_sup = [&](const RField& f) {
    double e = 0.0;
    for (int i = 0; i < s.n1(); ++i)
      for (int j = 0; j < s.n2(); ++j)
        if (std::abs(s.x2(j)) <= 0.9) e = std::max(e, std::abs(f(i, j)));
    return e;
  };
  // alpha = u + i v with constants: residual 2 v
  EXPECT_LT(band_sup(horizontal_residual(alpha_to_form(CField(s, cplx(0.7, 0))))), 1e-8);
  const double v = 0.4;
  const RField r = horizontal_residual(alpha_to_form(CField(s, cplx(0, v))));
  // third derivatives through the sphere stencil near |z| = 0.9
  EXPECT_LT(band_sup(r - RField(s, 2 * v)), 1e-3 * 2 * v);
}

TEST(VerticalProject, HorizontalBasesAreKilled) {
  const Grid t = Grid::torus(64, 64);
  for (int k = 1; k <= 3; ++k) {
    for (const MField& h : {form(t, [&](double x, double) { return cplx(std::cos(k * x), 0); }),
                            form(t, [&](double, double y) { return cplx(std::sin(k * y), 0); }),
                            form(t, [&](double x, double y) { return cplx(0, std::cos(k * (x + y))); }),
                            form(t, [&](double x, double y) { return cplx(0, std::cos(k * (x - y))); })}) {
      EXPECT_LT(sup_mat(vertical_project(h)), 1e-9);
    }
  }
}

TEST(VerticalProject, FixesVerticalElements) {
  const Grid t = Grid::torus(64, 64);
  const AssocPair b = base_pair(t);
  const RField F = sample(t, [](double x, double y) { return std::cos(x + y); });
  const MField h = lie_metric(hamiltonian_field(F, b), b.g);
  ASSERT_GT(sup_mat(h), 1.0);
  EXPECT_LT(sup_diff(vertical_project(h), h), 1e-9);
  EXPECT_LT(tangent_defect(h, b), 1e-12);  // vertical elements are anti-Hermitian
}

TEST(VerticalProject, OrthogonalProjectorProperty) {
  std::mt19937_64 rng(503);
  for (int rep = 0; rep < 20; ++rep) {
    const Grid t = Grid::torus(64, 64);
    const AssocPair b = base_pair(t);
    const MField h = random_anti_hermitian(rng, t), k = random_anti_hermitian(rng, t);
    const MField hv = vertical_project(h), kv = vertical_project(k);
    EXPECT_LT(sup_diff(vertical_project(hv), hv), 1e-9 * sup_mat(h));
    const double lhs = am_inner(hv, k, b), rhs = am_inner(h, kv, b);
    EXPECT_LT(std::abs(lhs - rhs), 1e-9 * std::sqrt(am_inner(h, h, b) * am_inner(k, k, b)));
    EXPECT_LT(sup_norm(div_j_delta(h - hv)), 1e-8 * (1 + sup_mat(h)));
  }
  EXPECT_THROW(vertical_project(MField(Grid::sphere(8, 8))), UnsupportedError);
}

TEST(Split, Examples) {
  const Grid t = Grid::torus(64, 64);
  const AssocPair b = base_pair(t);
  const MField hq = alpha_to_form(CField(t, cplx(0.3, 0.8)));
  for (SplitKind kind : {SplitKind::berger_ebin, SplitKind::hamiltonian}) {
    const SplitResult s = berger_ebin_split(hq, kind);
    EXPECT_LT(sup_mat(s.lie_part), 1e-14);
    EXPECT_EQ(s.convention, "constant-modes-in-h0");
  }
  const MField lx = lie_metric(sample(t, [](double x, double) { return Vec2(std::sin(x), 0); }), b.g);
  const SplitResult s = berger_ebin_split(lx);
  EXPECT_LT(sup_mat(s.h0), 1e-9);
  EXPECT_TRUE(!s.F.has_value());
  EXPECT_TRUE(berger_ebin_split(lx, SplitKind::hamiltonian).F.has_value());
}

TEST(Split, InvariantsProperty) {
  std::mt19937_64 rng(504);
  for (int rep = 0; rep < 20; ++rep) {
    const Grid t = Grid::torus(64, 64);
    const MField g0 = base_pair(t).g;
    const MField h = rep % 2 ? random_symmetric(rng, t) : random_anti_hermitian(rng, t);
    const double hh = flat_pairing(h, h);
    for (SplitKind kind : {SplitKind::berger_ebin, SplitKind::hamiltonian}) {
      const SplitResult s = berger_ebin_split(h, kind);
      EXPECT_LT(sup_diff(s.h0 + s.lie_part, h), 1e-10 * (1 + sup_mat(h)));
      EXPECT_LT(std::abs(flat_pairing(s.h0, s.lie_part)), 1e-9 * hh);
      if (kind == SplitKind::berger_ebin) {
        EXPECT_LT(sup_vec(divergence_form(s.h0, g0)), 1e-8 * (1 + sup_mat(h)));
      } else {
        EXPECT_LT(sup_norm(div_j_delta(s.h0)), 1e-8 * (1 + sup_mat(h)));
      }
    }
  }
}

TEST(Split, AntiHermitianClosure) {
  std::mt19937_64 rng(505);
  for (int rep = 0; rep < 10; ++rep) {
    const Grid t = Grid::torus(64, 64);
    const AssocPair b = base_pair(t);
    const MField h = random_anti_hermitian(rng, t);
    const SplitResult s = berger_ebin_split(h, SplitKind::hamiltonian);
    EXPECT_LT(tangent_defect(s.lie_part, b) * sup_mat(s.lie_part), 1e-9 * (1 + sup_mat(h)));
    EXPECT_LT(tangent_defect(s.h0, b) * sup_mat(s.h0), 1e-9 * (1 + sup_mat(h)));
  }
}
