#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "amspace/errors.hpp"
#include "amspace/tensorcalc.hpp"
#include "gen.hpp"

using namespace amspace;
using std::numbers::pi;

namespace {

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

double sup_gamma(const GammaField& a) {
  double e = 0.0;
  for (const auto& v : a.values()) e = std::max(e, v.max_abs());
  return e;
}

double band_sup(const RField& f, double zmax = 0.9) {
  double e = 0.0;
  const Grid& g = f.grid();
  for (int i = 0; i < g.n1(); ++i)
    for (int j = 0; j < g.n2(); ++j)
      if (g.chart() == Chart::torus || std::abs(g.x2(j)) <= zmax) e = std::max(e, std::abs(f(i, j)));
  return e;
}

RField mul(const RField& a, const RField& b) { return zip(a, b, [](double x, double y) { return x * y; }); }

MField form_of(const Grid& g, const std::function<Mat2(double, double)>& f) { return sample(g, f); }

// Associated metric g(p) for a Cayley scalar of small amplitude.
AssocPair associated(const CField& p) { return cayley_to_pair(complex_to_operator(p), base_pair(p.grid())); }

}  // namespace

TEST(Christoffels, FlatTorusVanishes) {
  const Grid t = Grid::torus(16, 16);
  EXPECT_EQ(sup_gamma(christoffels(base_pair(t).g)), 0.0);
}

TEST(Christoffels, RoundSphere) {
  const Grid s = Grid::sphere(32, 128);
  const GammaField G = christoffels(base_pair(s).g);
  double e = 0.0;
  for (int j = 0; j < s.n2(); ++j) {
    const double z = s.x2(j);
    if (std::abs(z) > 0.9) continue;
    const Gamma2& c = G(5, j);
    e = std::max(e, std::abs(c(1, 0, 0) - z * (1 - z * z)));
    e = std::max(e, std::abs(c(0, 0, 1) + z / (1 - z * z)) / (1 + std::abs(z / (1 - z * z))));
    e = std::max(e, std::abs(c(0, 1, 0) - c(0, 0, 1)));
  }
  EXPECT_LT(e, 1e-8);
}

TEST(Christoffels, ConformalMetric) {
  // g = e^{2u} I: Gamma^k_ij = delta_ki u_j + delta_kj u_i - delta_ij u_k
  std::mt19937_64 rng(401);
  const Grid t = Grid::torus(64, 64);
  RField u = gen::band_limited_real(rng, t);
  u *= 0.3 / sup_norm(u);
  const MField g = map(u, [](double x) { return Mat2(std::exp(2 * x) * Mat2::Identity()); });
  const RField u1 = partial(u, 1), u2 = partial(u, 2);
  const GammaField G = christoffels(g);
  double e = 0.0;
  for (int p = 0; p < t.size(); ++p) {
    const double du[2] = {u1[p], u2[p]};
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          const double ref = (k == i) * du[j] + (k == j) * du[i] - (i == j) * du[k];
          e = std::max(e, std::abs(G[p](k, i, j) - ref));
        }
  }
  EXPECT_LT(e, 1e-11);
}

TEST(Curvature, FlatAndRoundSphere) {
  EXPECT_EQ(sup_norm(scalar_curvature(base_pair(Grid::torus(16, 16)).g)), 0.0);
  const Grid s = Grid::sphere(128, 128);
  const RField K = gaussian_curvature(base_pair(s).g);
  EXPECT_LT(band_sup(K - RField(s, 1.0)), 1e-4);
  EXPECT_LT(band_sup(scalar_curvature(base_pair(s).g) - RField(s, 2.0)), 2e-4);
}

TEST(Curvature, ClosedFormForExponentialCayleyScalar) {
  const Grid t = Grid::torus(128, 128);
  const double tt = 0.3;
  const int k = 1, l = 2;
  const AssocPair p = associated(sample(t, [&](double x, double y) { return tt * std::polar(1.0, k * x + l * y); }));
  const RField K = gaussian_curvature(p.g);
  const RField ref = sample(t, [&](double x, double y) {
    return -(tt / (1 - tt * tt)) * ((k * k - l * l) * std::cos(k * x + l * y) - 2 * k * l * std::sin(k * x + l * y));
  });
  EXPECT_LT(sup_norm(K - ref) / sup_norm(ref), 1e-4);
}

TEST(Curvature, GaussBonnetTorusProperty) {
  std::mt19937_64 rng(402);
  for (int rep = 0; rep < 10; ++rep) {
    const Grid t = Grid::torus(64, 64);
    const AssocPair p = associated(gen::cayley_scalar(rng, t, 0.6));
    EXPECT_LT(std::abs(integrate(mul(gaussian_curvature(p.g), sqrt_det(p.g)))), 1e-8);
    // a non-associated metric: conformal factor times the associated one
    RField u = gen::band_limited_real(rng, t);
    u *= 0.4 / sup_norm(u);
    const MField g = zip(p.g, u, [](const Mat2& m, double x) { return Mat2(std::exp(x) * m); });
    EXPECT_LT(std::abs(total_scalar(g)), 1e-8);
  }
}

TEST(Curvature, SphereBandArea) {
  // r = 2 on the band |z| <= 0.9; compare with twice the band area measured
  // by the same lattice, since the band edge falls between lattice points
  const Grid s = Grid::sphere(128, 128);
  const MField g = base_pair(s).g;
  auto band = [](double, double z) { return std::abs(z) <= 0.9; };
  const double total = integrate_where(mul(scalar_curvature(g), sqrt_det(g)), band);
  const double area = integrate_where(sqrt_det(g), band);
  EXPECT_NEAR(total / (2 * area), 1.0, 1e-4);
  // extrapolating the band fraction to the whole sphere gives 8 pi
  EXPECT_NEAR(total / (area / (4 * pi)) / (8 * pi), 1.0, 1e-4);
}

TEST(Ricci, DimensionTwoIdentityProperty) {
  std::mt19937_64 rng(403);
  for (int rep = 0; rep < 10; ++rep) {
    const Grid t = Grid::torus(128, 128);
    const AssocPair p = associated(gen::cayley_scalar(rng, t, 0.6));
    RField u = gen::band_limited_real(rng, t);
    u *= 0.4 / sup_norm(u);
    const MField g = zip(p.g, u, [](const Mat2& m, double x) { return Mat2(std::exp(x) * m); });
    const MField ric = ricci(g);
    const RField r = scalar_curvature(g);
    double e = 0.0;
    for (int q = 0; q < t.size(); ++q) e = std::max(e, (ric[q] - 0.5 * r[q] * g[q]).norm());
    EXPECT_LT(e, 1e-4 * (1 + sup_norm(r)));
  }
  EXPECT_EQ(sup_mat(ricci(base_pair(Grid::torus(16, 16)).g)), 0.0);
}

TEST(Ricci, SphereIsEinstein) {
  const Grid s = Grid::sphere(128, 128);
  const AssocPair b = base_pair(s);
  const MField ric = ricci(b.g);
  double e = 0.0;
  for (int i = 0; i < s.n1(); ++i)
    for (int j = 0; j < s.n2(); ++j)
      if (std::abs(s.x2(j)) <= 0.9) e = std::max(e, (ric(i, j) - b.g(i, j)).norm() / b.g(i, j).norm());
  EXPECT_LT(e, 1e-4);
}

TEST(Aric, AssociatedMetricsAreCritical) {
  std::mt19937_64 rng(404);
  for (int rep = 0; rep < 10; ++rep) {
    const Grid t = Grid::torus(128, 128);
    const AssocPair p = associated(gen::cayley_scalar(rng, t));
    EXPECT_LT(sup_mat(aric(p)), 1e-4);
  }
  EXPECT_EQ(sup_mat(aric(base_pair(Grid::torus(16, 16)))), 0.0);
}

TEST(LieMetric, Examples) {
  const Grid s = Grid::sphere(32, 128);
  const MField ls = lie_metric(VField(s, Vec2(1, 0)), base_pair(s).g);
  double e = 0.0;
  for (int i = 0; i < s.n1(); ++i)
    for (int j = 0; j < s.n2(); ++j)
      if (std::abs(s.x2(j)) <= 0.9) e = std::max(e, ls(i, j).norm());
  EXPECT_LT(e, 1e-12);
  const Grid t = Grid::torus(32, 32);
  EXPECT_LT(sup_mat(lie_metric(VField(t, Vec2(1, 0)), base_pair(t).g)), 1e-14);
  const MField l = lie_metric(sample(t, [](double x, double) { return Vec2(std::sin(x), 0); }), base_pair(t).g);
  for (int p = 0; p < t.size(); ++p) {
    EXPECT_NEAR(l[p](0, 0), 2 * std::cos(t.x1(p / 32)), 1e-12);
    EXPECT_NEAR(l[p](0, 1), 0.0, 1e-12);
    EXPECT_NEAR(l[p](1, 1), 0.0, 1e-12);
  }
}

TEST(Divergence, Examples) {
  const Grid t = Grid::torus(32, 32);
  const MField g0 = base_pair(t).g;
  const MField h = form_of(t, [](double x, double) { return Mat2((Mat2() << std::cos(x), 0, 0, -std::cos(x)).finished()); });
  const VField d = divergence_form(h, g0);
  for (int p = 0; p < t.size(); ++p) {
    EXPECT_NEAR(d[p](0), std::sin(t.x1(p / 32)), 1e-12);
    EXPECT_NEAR(d[p](1), 0.0, 1e-12);
  }
  // holomorphic quadratic differential: constant alpha
  EXPECT_LT(sup_vec(divergence_form(alpha_to_form(CField(t, cplx(0.4, -0.3))), g0)), 1e-14);
}

TEST(Divergence, AdjointOfLieDerivative) {
  // <L_X g, h> = 2 <X, delta h>, both against sqrt(det g)
  std::mt19937_64 rng(405);
  for (int rep = 0; rep < 10; ++rep) {
    const Grid t = Grid::torus(64, 64);
    const MField g = associated(gen::cayley_scalar(rng, t, 0.5)).g;
    const RField x1 = gen::band_limited_real(rng, t, 6, 2), x2 = gen::band_limited_real(rng, t, 6, 2);
    const VField X = zip(x1, x2, [](double a, double b) { return Vec2(a, b); });
    const RField h11 = gen::band_limited_real(rng, t, 6, 2), h12 = gen::band_limited_real(rng, t, 6, 2),
                 h22 = gen::band_limited_real(rng, t, 6, 2);
    MField h(t);
    for (int p = 0; p < t.size(); ++p) h[p] << h11[p], h12[p], h12[p], h22[p];
    const RField sd = sqrt_det(g);
    const double lhs = integrate(mul(form_dot(lie_metric(X, g), h, g), sd));
    const double rhs = 2 * integrate(mul(vector_dot(X, divergence_form(h, g), g), sd));
    const double scale = integrate(mul(form_dot(h, h, g), sd)) + integrate(mul(vector_dot(X, X, g), sd));
    ASSERT_GT(std::abs(lhs), 1e-3 * scale) << "pairing is trivially small";
    EXPECT_LT(std::abs(lhs - rhs), 1e-8 * scale);
  }
}

TEST(Divergence, GradientAndVectorDivergence) {
  // div grad F is the Laplacian on the flat torus, and integrates to zero on a curved one
  std::mt19937_64 rng(406);
  const Grid t = Grid::torus(64, 64);
  const RField F = gen::band_limited_real(rng, t);
  const MField g0 = base_pair(t).g;
  const RField lap = spectral_apply(F, [](int k, int l) { return cplx(-(k * k + l * l), 0); });
  EXPECT_LT(sup_norm(vector_divergence(gradient(F, g0), g0) - lap), 1e-10 * (1 + sup_norm(lap)));
  const MField g = associated(gen::cayley_scalar(rng, t)).g;
  EXPECT_LT(std::abs(integrate(mul(vector_divergence(gradient(F, g), g), sqrt_det(g)))), 1e-10);
}

TEST(Box, Examples) {
  const Grid t = Grid::torus(32, 32);
  const MField g0 = base_pair(t).g;
  EXPECT_LT(sup_gamma(box_operator(2.5 * g0, g0)), 1e-15);
  const int k = 2;
  const MField a1 = alpha_to_form(sample(t, [&](double x, double) { return cplx(std::cos(k * x), 0); }));
  const GammaField b1 = box_operator(a1, g0);
  const int p = 3;
  const MField a3 = alpha_to_form(sample(t, [&](double x, double y) { return cplx(0, std::cos(p * (x + y))); }));
  const GammaField b3 = box_operator(a3, g0);
  for (int q = 0; q < t.size(); ++q) {
    const double x = t.x1(q / 32), y = t.x2(q % 32);
    EXPECT_NEAR(b1[q](0, 0, 0), -0.5 * k * std::sin(k * x), 1e-12);
    EXPECT_NEAR(b1[q](1, 0, 1), 0.5 * k * std::sin(k * x), 1e-12);
    EXPECT_NEAR(b3[q](0, 1, 1), p * std::sin(p * (x + y)), 1e-12);
    EXPECT_NEAR(b3[q](1, 0, 0), p * std::sin(p * (x + y)), 1e-12);
  }
}

TEST(Box, LinearizesChristoffels) {
  std::mt19937_64 rng(407);
  const Grid t = Grid::torus(32, 32);
  const MField g0 = base_pair(t).g;
  const RField u = gen::band_limited_real(rng, t), v = gen::band_limited_real(rng, t), w = gen::band_limited_real(rng, t);
  MField h(t);
  for (int q = 0; q < t.size(); ++q) h[q] << u[q], v[q], v[q], w[q];
  const double eps = 1e-4 / (1 + sup_mat(h));
  const GammaField gp = christoffels(g0 + eps * h), gm = christoffels(g0 - eps * h);
  const GammaField box = box_operator(h, g0);
  double e = 0.0;
  for (int q = 0; q < t.size(); ++q) {
    Gamma2 d = gp[q];
    d -= gm[q];
    d *= 1 / (2 * eps);
    d -= box[q];
    e = std::max(e, d.max_abs());
  }
  EXPECT_LT(e, 1e-6 * (1 + sup_gamma(box)));
}

TEST(Functional, TotalScalar) {
  const Grid t = Grid::torus(32, 32);
  EXPECT_EQ(total_scalar(base_pair(t).g), 0.0);
}

TEST(Functional, GradientOfTotalScalar) {
  // In two dimensions 1/2 r g - Ric vanishes and R is topological, so both
  // sides sit at roundoff; measure them against the size of the two terms.
  std::mt19937_64 rng(408);
  for (int rep = 0; rep < 5; ++rep) {
    const Grid t = Grid::torus(64, 64);
    const MField g = associated(gen::cayley_scalar(rng, t, 0.5)).g;
    const RField u = gen::band_limited_real(rng, t), v = gen::band_limited_real(rng, t), w = gen::band_limited_real(rng, t);
    MField h(t);
    for (int q = 0; q < t.size(); ++q) h[q] << u[q], v[q], v[q], w[q];
    const double eps = 1e-4;
    const double fd = (total_scalar(g + eps * h) - total_scalar(g - eps * h)) / (2 * eps);
    const double pair = gradient_pairing(g, h);
    const RField r = scalar_curvature(g);
    const RField ric_h = form_dot(ricci(g), h, g);
    RField terms(t);
    for (int q = 0; q < t.size(); ++q) {
      const double trh = (g[q].inverse() * h[q]).trace();
      terms[q] = std::abs(0.5 * r[q] * trh) + std::abs(ric_h[q]);
    }
    const double scale = integrate(mul(terms, sqrt_det(g)));
    ASSERT_GT(scale, 1e-2);
    EXPECT_LE(std::abs(fd - pair), 1e-3 * scale);
  }
}

TEST(Functional, ScalarCurvatureVariationAlongAntiHermitian) {
  std::mt19937_64 rng(409);
  for (int rep = 0; rep < 5; ++rep) {
    const Grid t = Grid::torus(128, 128);
    const AssocPair base = base_pair(t);
    const MField P = complex_to_operator(gen::cayley_scalar(rng, t, 0.5));
    const MField g = cayley_to_pair(P, base).g;
    const MField h = tangent_push(complex_to_operator(gen::band_limited(rng, t, 4, 2)), P, base);
    const double eps = 1e-4;
    const RField fd = (1 / (2 * eps)) * (scalar_curvature(g + eps * h) - scalar_curvature(g - eps * h));
    const RField dd = double_divergence(h, g);
    EXPECT_LT(sup_norm(fd - dd), 1e-3 * (1 + sup_norm(dd)));
  }
}
