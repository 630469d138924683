#pragma once

// Random inputs for the verify groups, drawn from a seeded std::mt19937_64.

#include <cmath>
#include <numbers>
#include <random>

#include "amspace/assoc.hpp"

namespace amspace::app::sampling {

using Rng = std::mt19937_64;

inline double normal(Rng& r) { return std::normal_distribution<double>()(r); }
inline double uniform(Rng& r, double a, double b) { return std::uniform_real_distribution<double>(a, b)(r); }
inline int uniform_int(Rng& r, int a, int b) { return std::uniform_int_distribution<int>(a, b)(r); }

inline Mat sym(Rng& r, int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = normal(r);
  return 0.5 * (m + m.transpose());
}

// M M^T + n I
inline SpdMatrix spd_mild(Rng& r, int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = normal(r);
  return SpdMatrix(symmetrize(m * m.transpose() + n * Mat::Identity(n, n)));
}

// A few Fourier modes with |k|, |l| <= kmax; sphere modes are e^{i(k pi z + l phi)}.
inline CField band_limited(Rng& r, const Grid& g, int modes = 4, int kmax = 3) {
  struct Mode {
    int k, l;
    cplx c;
  };
  std::vector<Mode> ms;
  for (int i = 0; i < modes; ++i) {
    const int k = uniform_int(r, -kmax, kmax), l = uniform_int(r, -kmax, kmax);
    const double re = normal(r), im = normal(r);
    ms.push_back({k, l, cplx(re, im)});
  }
  const bool sphere = g.chart() == Chart::sphere;
  return sample(g, [&](double x1, double x2) {
    cplx s(0.0, 0.0);
    for (const Mode& m : ms) {
      const double th = sphere ? m.k * std::numbers::pi * x2 + m.l * x1 : m.l * x1 + m.k * x2;
      s += m.c * std::polar(1.0, th);
    }
    return s;
  });
}

inline RField band_limited_real(Rng& r, const Grid& g, int modes = 4, int kmax = 3) {
  return real_part(band_limited(r, g, modes, kmax));
}

// sup |p| drawn uniformly from [0.1, rmax]
inline CField cayley_scalar(Rng& r, const Grid& g, double rmax = 0.8) {
  CField p = band_limited(r, g);
  const double s = sup_norm(p);
  const double target = uniform(r, 0.1, rmax);
  for (auto& v : p.values()) v *= target / s;
  return p;
}

inline double sup_mat(const MField& a) {
  double e = 0.0;
  for (const auto& m : a.values()) e = std::max(e, m.norm());
  return e;
}

inline double sup_diff(const MField& a, const MField& b) {
  double e = 0.0;
  for (int k = 0; k < a.size(); ++k) e = std::max(e, (a[k] - b[k]).norm());
  return e;
}

inline double sup_vec(const VField& a) {
  double e = 0.0;
  for (const auto& v : a.values()) e = std::max(e, v.norm());
  return e;
}

}  // namespace amspace::app::sampling
