#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "amspace/errors.hpp"
#include "amspace/fields.hpp"
#include "gen.hpp"

using namespace amspace;
using std::numbers::pi;

namespace {

double max_err(const RField& f, const std::function<double(double, double)>& ref) {
  double e = 0.0;
  const Grid& g = f.grid();
  for (int i = 0; i < g.n1(); ++i)
    for (int j = 0; j < g.n2(); ++j) e = std::max(e, std::abs(f(i, j) - ref(g.x1(i), g.x2(j))));
  return e;
}

double max_err(const CField& f, const std::function<cplx(double, double)>& ref) {
  double e = 0.0;
  const Grid& g = f.grid();
  for (int i = 0; i < g.n1(); ++i)
    for (int j = 0; j < g.n2(); ++j) e = std::max(e, std::abs(f(i, j) - ref(g.x1(i), g.x2(j))));
  return e;
}

}  // namespace

TEST(Grid, Lattice) {
  const Grid s = Grid::sphere(16, 8);
  EXPECT_DOUBLE_EQ(s.x1(0), 2 * pi / 32);
  EXPECT_DOUBLE_EQ(s.x2(0), -1.0 + 1.0 / 8);
  EXPECT_DOUBLE_EQ(s.x2(7), 1.0 - 1.0 / 8);
  EXPECT_TRUE(s.periodic(1));
  EXPECT_FALSE(s.periodic(2));
  const Grid t = Grid::torus(4, 4);
  EXPECT_DOUBLE_EQ(t.x2(3), 2 * pi * 3.5 / 4);
  EXPECT_THROW(Grid(Chart::torus, 0, 4), DomainError);
}

TEST(Integrate, Examples) {
  const Grid s = Grid::sphere(128, 128);
  EXPECT_NEAR(integrate(RField(s, 1.0)), 4 * pi, 1e-13);
  EXPECT_NEAR(integrate(sample(s, [](double, double z) { return std::cos(pi * z) * std::cos(pi * z); })), 2 * pi,
              1e-13);
  const Grid t = Grid::torus(64, 64);
  EXPECT_NEAR(integrate(sample(t, [](double x, double y) { return std::cos(x + y); })), 0.0, 1e-13);
  EXPECT_NEAR(integrate(RField(t, 1.0)), 4 * pi * pi, 1e-12);
}

TEST(Integrate, ExactOnBandLimitedProperty) {
  std::mt19937_64 rng(101);
  for (int rep = 0; rep < 50; ++rep) {
    const bool sphere = rep % 2 == 0;
    const Grid g = sphere ? Grid::sphere(64, 64) : Grid::torus(64, 64);
    const double c0 = gen::normal(rng);
    // constant plus nonconstant modes, so the integral is c0 times the area
    std::vector<std::pair<std::pair<int, int>, cplx>> modes;
    while (modes.size() < 6) {
      const int k = gen::uniform_int(rng, -20, 20), l = gen::uniform_int(rng, -20, 20);
      if (k != 0 || l != 0) modes.push_back({{k, l}, cplx(gen::normal(rng), gen::normal(rng))});
    }
    const double zs = sphere ? pi : 1.0;
    const CField f = sample(g, [&](double a, double b) {
      cplx v(c0, 0.0);
      for (const auto& [kl, c] : modes) v += c * std::polar(1.0, kl.first * a + kl.second * zs * b);
      return v;
    });
    const double area = sphere ? 4 * pi : 4 * pi * pi;
    EXPECT_LT(std::abs(integrate(f) - c0 * area), 1e-12 * area * (1 + sup_norm(f)));
  }
}

TEST(Integrate, SphereModesIntegrateToZero) {
  const Grid s = Grid::sphere(64, 64);
  for (int m = -5; m <= 5; ++m)
    for (int l = -5; l <= 5; ++l) {
      if (m == 0 && l == 0) continue;
      const CField f = sample(s, [&](double p, double z) { return std::polar(1.0, m * pi * z + l * p); });
      EXPECT_LT(std::abs(integrate(f)), 1e-12) << m << " " << l;
    }
}

TEST(Integrate, PairwiseSumIsDeterministic) {
  std::vector<double> x(1000);
  std::mt19937_64 rng(3);
  for (auto& v : x) v = gen::normal(rng);
  const double a = pairwise_sum(x.data(), x.size());
  EXPECT_EQ(a, pairwise_sum(x.data(), x.size()));
  double naive = 0;
  for (double v : x) naive += v;
  EXPECT_NEAR(a, naive, 1e-12);
}

TEST(Partial, Examples) {
  const Grid t = Grid::torus(8, 8);
  const RField f = sample(t, [](double x, double) { return std::sin(x); });
  EXPECT_LT(max_err(partial(f, 1), [](double x, double) { return std::cos(x); }), 1e-12);
  EXPECT_LT(sup_norm(partial(RField(t, 3.0), 1)), 1e-14);
  EXPECT_LT(sup_norm(partial(RField(t, 3.0), 2)), 1e-14);

  const Grid s = Grid::sphere(128, 128);
  const RField c = sample(s, [](double p, double z) { return std::cos(pi * z + p); });
  EXPECT_LT(max_err(partial(c, 2), [](double p, double z) { return -pi * std::sin(pi * z + p); }), 1e-10);
  EXPECT_LT(max_err(partial(c, 1), [](double p, double z) { return -std::sin(pi * z + p); }), 1e-12);
}

TEST(Partial, SecondDerivatives) {
  const Grid t = Grid::torus(32, 32);
  const RField f = sample(t, [](double x, double y) { return std::sin(2 * x - y); });
  EXPECT_LT(max_err(partial2(f, 1), [](double x, double y) { return -4 * std::sin(2 * x - y); }), 1e-11);
  EXPECT_LT(max_err(partial2(f, 2), [](double x, double y) { return -std::sin(2 * x - y); }), 1e-11);
}

TEST(Partial, StencilMethodsConverge) {
  // fourth order on a smooth periodic function
  for (DiffMethod m : {DiffMethod::central4, DiffMethod::open4}) {
    double prev = 0.0;
    for (int n : {32, 64}) {
      const Grid t = Grid::torus(n, 8);
      const RField f = sample(t, [](double x, double) { return std::sin(x); });
      const double e = max_err(partial(f, 1, m), [](double x, double) { return std::cos(x); });
      if (prev > 0.0) {
        EXPECT_GT(std::log2(prev / e), 3.8);
      }
      prev = e;
    }
  }
}

TEST(Partial, WideStencilOnNonPeriodicSphereData) {
  const Grid s = Grid::sphere(8, 128);
  const RField q = sample(s, [](double, double z) { return 1.0 / (1.0 - z * z); });
  const RField d1 = partial(q, 2, DiffMethod::wide);
  const RField d2 = partial2(q, 2, DiffMethod::wide);
  double e1 = 0.0, e2 = 0.0;
  for (int j = 0; j < s.n2(); ++j) {
    const double z = s.x2(j);
    if (std::abs(z) > 0.9) continue;
    const double r1 = 2 * z / std::pow(1 - z * z, 2), r2 = (2 + 6 * z * z) / std::pow(1 - z * z, 3);
    e1 = std::max(e1, std::abs(d1(0, j) - r1) / (1 + std::abs(r1)));
    e2 = std::max(e2, std::abs(d2(0, j) - r2) / (1 + std::abs(r2)));
  }
  // relative to the derivative size, which reaches 1e3 at |z| = 0.9
  EXPECT_LT(e1, 1e-5);
  EXPECT_LT(e2, 1e-4);
}

TEST(Partial, IntegrationByPartsProperty) {
  std::mt19937_64 rng(102);
  for (int rep = 0; rep < 40; ++rep) {
    const bool sphere = rep % 2 == 0;
    const Grid g = sphere ? Grid::sphere(64, 64) : Grid::torus(64, 64);
    const RField f = gen::band_limited_real(rng, g), h = gen::band_limited_real(rng, g);
    for (int axis : {1, 2}) {
      const RField df = partial(f, axis), dh = partial(h, axis);
      const double v = integrate(zip(df, h, [](double a, double b) { return a * b; })) +
                       integrate(zip(f, dh, [](double a, double b) { return a * b; }));
      EXPECT_LT(std::abs(v), 1e-11 * (1 + sup_norm(f) * sup_norm(h)));
    }
  }
}

TEST(Partial, MatrixAndVectorFieldsAreComponentwise) {
  const Grid t = Grid::torus(16, 16);
  const MField m = sample(t, [](double x, double y) {
    Mat2 a;
    a << std::sin(x), std::cos(y), std::cos(y), std::sin(x + y);
    return a;
  });
  const MField d = partial(m, 1);
  for (int k = 0; k < t.size(); ++k) {
    EXPECT_NEAR(d[k](0, 1), 0.0, 1e-13);
    EXPECT_NEAR(d[k](1, 1), std::cos(t.x1(k / 16) + t.x2(k % 16)), 1e-12);
  }
}

TEST(Basis, Examples) {
  const Grid t = Grid::torus(16, 16);
  const CField cx = basis_field(t, {BasisSpec::Family::torus_mode, 1, 0, Trig::cos, false});
  EXPECT_LT(max_err(cx, [](double x, double) { return cplx(std::cos(x), 0); }), 1e-15);
  const Grid s = Grid::sphere(16, 16);
  const CField sm = basis_field(s, {BasisSpec::Family::sphere_mode, pi, 1, Trig::sin, true});
  EXPECT_LT(max_err(sm, [](double p, double z) { return cplx(0, std::sin(pi * z + p)); }), 1e-15);
  const CField h = basis_field(t, {BasisSpec::Family::torus_sum, 1, 0, Trig::cos, true});
  EXPECT_LT(max_err(h, [](double x, double y) { return cplx(0, std::cos(x + y)); }), 1e-15);
  const CField d = basis_field(t, {BasisSpec::Family::torus_diff, 2, 0, Trig::cos, true});
  EXPECT_LT(max_err(d, [](double x, double y) { return cplx(0, std::cos(2 * (x - y))); }), 1e-15);
  const CField yl = basis_field(t, {BasisSpec::Family::torus_y, 0, 3, Trig::sin, false});
  EXPECT_LT(max_err(yl, [](double, double y) { return cplx(std::sin(3 * y), 0); }), 1e-15);
}

TEST(Basis, IndexChecks) {
  const Grid s = Grid::sphere(16, 16);
  EXPECT_THROW(basis_field(s, {BasisSpec::Family::sphere_mode, 1.0, 1, Trig::cos, false}), IndexError);
  EXPECT_NO_THROW(basis_field(s, {BasisSpec::Family::sphere_mode, -2 * pi, 1, Trig::cos, false}));
  const Grid t = Grid::torus(16, 16);
  EXPECT_THROW(basis_field(t, {BasisSpec::Family::torus_x, 1.5, 0, Trig::cos, false}), IndexError);
  EXPECT_THROW(basis_field(t, {BasisSpec::Family::sphere_mode, pi, 0, Trig::cos, false}), UnsupportedError);
}

TEST(Fourier, CosineModes) {
  const Grid t = Grid::torus(32, 32);
  const ModeMap m = fourier_decompose(to_complex(sample(t, [](double x, double) { return std::cos(x); })));
  ASSERT_EQ(m.modes.size(), 2u);
  EXPECT_LT(std::abs(m.modes.at({1, 0}) - 0.5), 1e-15);
  EXPECT_LT(std::abs(m.modes.at({-1, 0}) - 0.5), 1e-15);
}

TEST(Fourier, ProductOfSinesSplitsIntoTwoCosines) {
  // 2kl sin kx sin ly = kl (cos(kx - ly) - cos(kx + ly))
  const Grid t = Grid::torus(32, 32);
  const int k = 2, l = 3;
  const ModeMap m = fourier_decompose(
      to_complex(sample(t, [&](double x, double y) { return 2.0 * k * l * std::sin(k * x) * std::sin(l * y); })));
  ASSERT_EQ(m.modes.size(), 4u);
  const double c = k * l / 2.0;
  EXPECT_LT(std::abs(m.modes.at({k, -l}) - c), 1e-13);
  EXPECT_LT(std::abs(m.modes.at({-k, l}) - c), 1e-13);
  EXPECT_LT(std::abs(m.modes.at({k, l}) + c), 1e-13);
  EXPECT_LT(std::abs(m.modes.at({-k, -l}) + c), 1e-13);
}

TEST(Fourier, RoundtripProperty) {
  std::mt19937_64 rng(103);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 1 << gen::uniform_int(rng, 4, 7);
    const Grid t = Grid::torus(n, n);
    const CField f = gen::band_limited(rng, t, 6, n / 2 - 1);
    const CField back = fourier_reconstruct(fourier_decompose(f, 0.0), t);
    EXPECT_LT(sup_norm(back - f), 1e-12 * (1 + sup_norm(f)));
  }
}

TEST(Fourier, SphereIsUnsupported) {
  EXPECT_THROW(fourier_decompose(CField(Grid::sphere(8, 8))), UnsupportedError);
}

TEST(Fourier, SpectralLaplacian) {
  const Grid t = Grid::torus(32, 32);
  const RField r = sample(t, [](double x, double y) { return std::sin(x) * std::sin(2 * y); });
  const RField lap = spectral_apply(r, [](int k, int l) { return cplx(-(k * k + l * l), 0); });
  EXPECT_LT(sup_norm(lap + 5.0 * r), 1e-12);
}

TEST(Dump, CsvFormat) {
  const Grid t = Grid::torus(4, 4);
  std::ostringstream os;
  dump_csv(CField(t, cplx(1.0 / 3.0, -2.0)), os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "axis1,axis2,re,im");
  std::getline(is, line);
  EXPECT_NE(line.find("0.33333333333333331"), std::string::npos) << line;
  int rows = 1;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 16);
}

TEST(Field, GridMismatchThrows) {
  EXPECT_THROW(RField(Grid::torus(8, 8)) + RField(Grid::torus(16, 8)), DimensionError);
}
