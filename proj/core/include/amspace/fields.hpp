#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "amspace/matalg.hpp"

namespace amspace {

using cplx = std::complex<double>;

enum class Chart { sphere, torus };

// Uniform midpoint lattice. Sphere chart: axis1 = phi in (0, 2 pi),
// axis2 = z in (-1, 1). Torus: axis1 = x, axis2 = y, both [0, 2 pi).
class Grid {
 public:
  Grid(Chart chart, int n1, int n2);
  static Grid sphere(int n1, int n2) { return Grid(Chart::sphere, n1, n2); }
  static Grid torus(int n1, int n2) { return Grid(Chart::torus, n1, n2); }

  Chart chart() const { return chart_; }
  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int size() const { return n1_ * n2_; }
  double length(int axis) const;
  double step(int axis) const { return length(axis) / (axis == 1 ? n1_ : n2_); }
  double x1(int i) const { return step(1) * (i + 0.5); }
  double x2(int j) const;
  double weight() const { return step(1) * step(2); }
  bool periodic(int axis) const { return chart_ == Chart::torus || axis == 1; }

  bool operator==(const Grid& o) const { return chart_ == o.chart_ && n1_ == o.n1_ && n2_ == o.n2_; }
  bool operator!=(const Grid& o) const { return !(*this == o); }

 private:
  Chart chart_;
  int n1_, n2_;
};

template <class T>
inline T zero_value() {
  if constexpr (std::is_arithmetic_v<T>) {
    return T(0);
  } else if constexpr (std::is_same_v<T, cplx>) {
    return cplx(0.0, 0.0);
  } else {
    return T::Zero();
  }
}

// Values stored row-major: index i * n2 + j, i along axis1.
template <class T>
class Field {
 public:
  explicit Field(const Grid& grid, const T& fill = zero_value<T>()) : grid_(grid), v_(grid.size(), fill) {}

  const Grid& grid() const { return grid_; }
  int size() const { return grid_.size(); }
  T& operator()(int i, int j) { return v_[i * grid_.n2() + j]; }
  const T& operator()(int i, int j) const { return v_[i * grid_.n2() + j]; }
  T& operator[](int k) { return v_[k]; }
  const T& operator[](int k) const { return v_[k]; }
  std::vector<T>& values() { return v_; }
  const std::vector<T>& values() const { return v_; }

  Field& operator+=(const Field& o) {
    check(o);
    for (int k = 0; k < size(); ++k) v_[k] += o.v_[k];
    return *this;
  }
  Field& operator-=(const Field& o) {
    check(o);
    for (int k = 0; k < size(); ++k) v_[k] -= o.v_[k];
    return *this;
  }
  Field& operator*=(double s) {
    for (auto& x : v_) x *= s;
    return *this;
  }
  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }
  friend Field operator*(double s, Field a) { return a *= s; }
  friend Field operator*(Field a, double s) { return a *= s; }
  friend Field operator-(Field a) { return a *= -1.0; }

  void check(const Field& o) const;

 private:
  Grid grid_;
  std::vector<T> v_;
};

using RField = Field<double>;
using CField = Field<cplx>;
using VField = Field<Vec2>;
using MField = Field<Mat2>;

void require_same_grid(const Grid& a, const Grid& b);

template <class T>
void Field<T>::check(const Field& o) const {
  require_same_grid(grid_, o.grid_);
}

// f(x1, x2) at every lattice point.
template <class F>
auto sample(const Grid& g, F f) {
  using T = std::decay_t<decltype(f(0.0, 0.0))>;
  Field<T> out(g);
  for (int i = 0; i < g.n1(); ++i)
    for (int j = 0; j < g.n2(); ++j) out(i, j) = f(g.x1(i), g.x2(j));
  return out;
}

template <class T, class F>
auto map(const Field<T>& a, F f) {
  using U = std::decay_t<decltype(f(a[0]))>;
  Field<U> out(a.grid());
  for (int k = 0; k < a.size(); ++k) out[k] = f(a[k]);
  return out;
}

template <class T, class S, class F>
auto zip(const Field<T>& a, const Field<S>& b, F f) {
  require_same_grid(a.grid(), b.grid());
  using U = std::decay_t<decltype(f(a[0], b[0]))>;
  Field<U> out(a.grid());
  for (int k = 0; k < a.size(); ++k) out[k] = f(a[k], b[k]);
  return out;
}

RField real_part(const CField& f);
RField imag_part(const CField& f);
CField to_complex(const RField& re, const RField* im = nullptr);
double sup_norm(const RField& f);
double sup_norm(const CField& f);
bool all_finite(const RField& f);

// Midpoint rule against the chart measure, fixed pairwise summation tree.
double integrate(const RField& f);
cplx integrate(const CField& f);
// Same rule restricted to lattice points where keep(x1, x2) holds.
double integrate_where(const RField& f, const std::function<bool(double, double)>& keep);
double pairwise_sum(const double* x, std::size_t n);

enum class DiffMethod {
  spectral,  // FFT along the axis; the field must be periodic along it
  central4,  // 5-point stencils; periodic wrap, shifted near non-periodic edges
  wide,      // 13-point stencils; on the sphere z axis biased toward the equator
  open4,     // 5-point stencils that never wrap, for non-periodic data on any axis
};

template <class T>
Field<T> partial(const Field<T>& f, int axis, DiffMethod method = DiffMethod::spectral);
// Second derivative along one axis, computed directly (not nested).
template <class T>
Field<T> partial2(const Field<T>& f, int axis, DiffMethod method = DiffMethod::spectral);

enum class Trig { cos, sin };

struct BasisSpec {
  enum class Family {
    sphere_mode,  // trig(k z + l phi), k in pi Z
    torus_mode,   // trig(k x + l y)
    torus_x,      // trig(k x), real
    torus_y,      // trig(l y), real
    torus_sum,    // i trig(k (x + y))
    torus_diff,   // i trig(k (x - y))
  };
  Family family = Family::torus_mode;
  double k = 0.0;
  int l = 0;
  Trig trig = Trig::cos;
  bool imaginary = false;
};

CField basis_field(const Grid& g, const BasisSpec& b);

// Coefficients c_kl of f = sum c_kl e^{i(k x + l y)}, |k| < n1/2, |l| < n2/2.
struct ModeMap {
  int n1 = 0, n2 = 0;
  std::map<std::pair<int, int>, cplx> modes;
};

// Modes with |c| <= drop_tol * max|c| are omitted.
ModeMap fourier_decompose(const CField& f, double drop_tol = 1e-13);
CField fourier_reconstruct(const ModeMap& m, const Grid& g);

inline constexpr double kSpectralChop = 1e-14;

// Multiplies mode (k, l) of a torus field by symbol(k, l), wavenumbers in
// integer units. Nyquist modes and modes below kSpectralChop times the
// largest coefficient are zeroed.
CField spectral_apply(const CField& f, const std::function<cplx(int, int)>& symbol);
RField spectral_apply(const RField& f, const std::function<cplx(int, int)>& symbol);

// Header axis1,axis2,re,im; one row per lattice point, 17 significant digits.
void dump_csv(const CField& f, std::ostream& os);
void dump_csv(const RField& f, std::ostream& os);

}  // namespace amspace
