#include "amspace/fields.hpp"

#include <fftw3.h>

#include <cmath>
#include <iomanip>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <string>

#include "amspace/errors.hpp"

namespace amspace {

namespace {
constexpr double kPi = std::numbers::pi;
}

Grid::Grid(Chart chart, int n1, int n2) : chart_(chart), n1_(n1), n2_(n2) {
  if (n1 < 4 || n2 < 4) throw DomainError("Grid: resolution must be at least 4 per axis");
}

double Grid::length(int axis) const {
  if (axis == 1) return 2.0 * kPi;
  return chart_ == Chart::sphere ? 2.0 : 2.0 * kPi;
}

double Grid::x2(int j) const {
  const double s = step(2) * (j + 0.5);
  return chart_ == Chart::sphere ? -1.0 + s : s;
}

void require_same_grid(const Grid& a, const Grid& b) {
  if (a != b) throw DimensionError("fields live on different grids");
}

RField real_part(const CField& f) {
  return map(f, [](const cplx& c) { return c.real(); });
}
RField imag_part(const CField& f) {
  return map(f, [](const cplx& c) { return c.imag(); });
}
CField to_complex(const RField& re, const RField* im) {
  CField out(re.grid());
  if (im) require_same_grid(re.grid(), im->grid());
  for (int k = 0; k < re.size(); ++k) out[k] = cplx(re[k], im ? (*im)[k] : 0.0);
  return out;
}

double sup_norm(const RField& f) {
  double m = 0.0;
  for (double x : f.values()) m = std::max(m, std::abs(x));
  return m;
}
double sup_norm(const CField& f) {
  double m = 0.0;
  for (const cplx& x : f.values()) m = std::max(m, std::abs(x));
  return m;
}
bool all_finite(const RField& f) {
  for (double x : f.values())
    if (!std::isfinite(x)) return false;
  return true;
}

double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 16) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

double integrate(const RField& f) {
  return pairwise_sum(f.values().data(), f.values().size()) * f.grid().weight();
}

cplx integrate(const CField& f) {
  return cplx(integrate(real_part(f)), integrate(imag_part(f)));
}

double integrate_where(const RField& f, const std::function<bool(double, double)>& keep) {
  const Grid& g = f.grid();
  std::vector<double> v;
  v.reserve(g.size());
  for (int i = 0; i < g.n1(); ++i)
    for (int j = 0; j < g.n2(); ++j)
      if (keep(g.x1(i), g.x2(j))) v.push_back(f(i, j));
  return pairwise_sum(v.data(), v.size()) * g.weight();
}

// ---------------------------------------------------------------------------
// FFT plumbing. Plans are cached per (length, sign); creation is the only
// FFTW call that is not thread-safe.

namespace {

struct FftBuffer {
  fftw_complex* p;
  explicit FftBuffer(int n) : p(fftw_alloc_complex(n)) {}
  ~FftBuffer() { fftw_free(p); }
  FftBuffer(const FftBuffer&) = delete;
  FftBuffer& operator=(const FftBuffer&) = delete;
  cplx& operator[](int k) { return reinterpret_cast<cplx*>(p)[k]; }
};

fftw_plan plan_for(int n, int sign) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, sign});
  if (it != cache.end()) return it->second;
  FftBuffer a(n), b(n);
  fftw_plan p = fftw_plan_dft_1d(n, a.p, b.p, sign, FFTW_ESTIMATE);
  cache[{n, sign}] = p;
  return p;
}

void fft(FftBuffer& in, FftBuffer& out, int n, int sign) {
  fftw_execute_dft(plan_for(n, sign), in.p, out.p);
}

int signed_mode(int m, int n) { return m < n / 2 ? m : m - n; }

// Fornberg's recursion: weights w[d][j] of the d-th derivative at x0 from
// values at nodes x[j].
std::vector<std::vector<double>> fornberg(const std::vector<double>& x, double x0, int maxd) {
  const int m = static_cast<int>(x.size());
  std::vector<std::vector<double>> c(maxd + 1, std::vector<double>(m, 0.0));
  double c1 = 1.0, c4 = x[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i < m; ++i) {
    const int mn = std::min(i, maxd);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (int k = mn; k >= 1; --k) c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c;
}

struct Stencil {
  std::vector<int> offsets;
  std::vector<double> w;
};

// Stencil for lattice index j of n, derivative order d, width W. On a
// non-periodic axis the window leans toward the middle of the axis by all
// but `bias` points, then shifts to stay inside.
Stencil make_stencil(int j, int n, int d, int W, bool periodic, int bias) {
  int lo;
  if (periodic) {
    lo = -(W / 2);
  } else {
    lo = (2 * j + 1 > n) ? -(W - 1 - bias) : -bias;
    if (j + lo < 0) lo = -j;
    if (j + lo + W - 1 > n - 1) lo = n - 1 - j - (W - 1);
  }
  Stencil s;
  std::vector<double> x(W);
  for (int k = 0; k < W; ++k) {
    s.offsets.push_back(lo + k);
    x[k] = lo + k;
  }
  s.w = fornberg(x, 0.0, d)[d];
  return s;
}

void diff_line_stencil(const double* in, double* out, int n, double h, int d, int W, bool periodic, int bias) {
  if (n < W) throw DomainError("partial: grid too coarse for the stencil");
  const double scale = std::pow(h, -d);
  if (periodic) {
    const Stencil s = make_stencil(0, n, d, W, true, 0);
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < W; ++k) acc += s.w[k] * in[((j + s.offsets[k]) % n + n) % n];
      out[j] = acc * scale;
    }
    return;
  }
  for (int j = 0; j < n; ++j) {
    const Stencil s = make_stencil(j, n, d, W, false, bias);
    double acc = 0.0;
    for (int k = 0; k < W; ++k) acc += s.w[k] * in[j + s.offsets[k]];
    out[j] = acc * scale;
  }
}

void diff_line_spectral(const double* in, double* out, int n, double length, int d) {
  FftBuffer a(n), b(n);
  for (int j = 0; j < n; ++j) a[j] = cplx(in[j], 0.0);
  fft(a, b, n, FFTW_FORWARD);
  for (int m = 0; m < n; ++m) {
    const int k = signed_mode(m, n);
    if (d % 2 == 1 && 2 * k == -n) {
      b[m] = 0.0;
      continue;
    }
    const cplx ik(0.0, 2.0 * kPi * k / length);
    b[m] *= std::pow(ik, d);
  }
  fft(b, a, n, FFTW_BACKWARD);
  for (int j = 0; j < n; ++j) out[j] = a[j].real() / n;
}

// Scalar components of field value types.
template <class T>
struct Comp;
template <>
struct Comp<double> {
  static constexpr int n = 1;
  static double get(const double& v, int) { return v; }
  static void set(double& v, int, double x) { v = x; }
};
template <>
struct Comp<cplx> {
  static constexpr int n = 2;
  static double get(const cplx& v, int c) { return c == 0 ? v.real() : v.imag(); }
  static void set(cplx& v, int c, double x) {
    if (c == 0) v.real(x); else v.imag(x);
  }
};
template <>
struct Comp<Vec2> {
  static constexpr int n = 2;
  static double get(const Vec2& v, int c) { return v(c); }
  static void set(Vec2& v, int c, double x) { v(c) = x; }
};
template <>
struct Comp<Mat2> {
  static constexpr int n = 4;
  static double get(const Mat2& v, int c) { return v(c / 2, c % 2); }
  static void set(Mat2& v, int c, double x) { v(c / 2, c % 2) = x; }
};

template <class T>
Field<T> differentiate(const Field<T>& f, int axis, DiffMethod method, int d) {
  if (axis != 1 && axis != 2) throw IndexError("partial: axis must be 1 or 2");
  const Grid& g = f.grid();
  const int n = axis == 1 ? g.n1() : g.n2();
  const int lines = axis == 1 ? g.n2() : g.n1();
  const bool periodic = g.periodic(axis) && method != DiffMethod::open4;
  const double h = g.step(axis);
  Field<T> out(g);
  std::vector<double> in(n), res(n);
  for (int line = 0; line < lines; ++line) {
    for (int c = 0; c < Comp<T>::n; ++c) {
      for (int s = 0; s < n; ++s) {
        const T& v = axis == 1 ? f(s, line) : f(line, s);
        in[s] = Comp<T>::get(v, c);
      }
      switch (method) {
        case DiffMethod::spectral:
          diff_line_spectral(in.data(), res.data(), n, g.length(axis), d);
          break;
        case DiffMethod::central4:
        case DiffMethod::open4:
          diff_line_stencil(in.data(), res.data(), n, h, d, 5, periodic, 2);
          break;
        case DiffMethod::wide:
          diff_line_stencil(in.data(), res.data(), n, h, d, 13, periodic, 2);
          break;
      }
      for (int s = 0; s < n; ++s) {
        T& v = axis == 1 ? out(s, line) : out(line, s);
        Comp<T>::set(v, c, res[s]);
      }
    }
  }
  return out;
}

}  // namespace

template <class T>
Field<T> partial(const Field<T>& f, int axis, DiffMethod method) {
  return differentiate(f, axis, method, 1);
}

template <class T>
Field<T> partial2(const Field<T>& f, int axis, DiffMethod method) {
  return differentiate(f, axis, method, 2);
}

template RField partial(const RField&, int, DiffMethod);
template CField partial(const CField&, int, DiffMethod);
template VField partial(const VField&, int, DiffMethod);
template MField partial(const MField&, int, DiffMethod);
template RField partial2(const RField&, int, DiffMethod);
template CField partial2(const CField&, int, DiffMethod);
template VField partial2(const VField&, int, DiffMethod);
template MField partial2(const MField&, int, DiffMethod);

// ---------------------------------------------------------------------------

namespace {

bool is_integer(double x) { return std::abs(x - std::round(x)) <= 1e-12 * std::max(1.0, std::abs(x)); }

}  // namespace

CField basis_field(const Grid& g, const BasisSpec& s) {
  using F = BasisSpec::Family;
  const bool sphere_family = s.family == F::sphere_mode;
  if (sphere_family != (g.chart() == Chart::sphere)) {
    throw UnsupportedError("basis_field: family does not belong to this chart");
  }
  if (sphere_family) {
    if (!is_integer(s.k / kPi)) throw IndexError("basis_field: sphere frequency k must be a multiple of pi");
  } else if (!is_integer(s.k)) {
    throw IndexError("basis_field: torus frequency k must be an integer");
  }
  bool imag = s.imaginary;
  if (s.family == F::torus_x || s.family == F::torus_y) {
    if (imag) throw IndexError("basis_field: horizontal real family cannot be imaginary");
  }
  if (s.family == F::torus_sum || s.family == F::torus_diff) imag = true;
  const double k = s.k;
  const double l = s.l;
  auto phase = [&](double x1, double x2) {
    switch (s.family) {
      case F::sphere_mode: return k * x2 + l * x1;
      case F::torus_mode: return k * x1 + l * x2;
      case F::torus_x: return k * x1;
      case F::torus_y: return l * x2;
      case F::torus_sum: return k * (x1 + x2);
      case F::torus_diff: return k * (x1 - x2);
    }
    return 0.0;
  };
  return sample(g, [&](double x1, double x2) {
    const double th = phase(x1, x2);
    const double v = s.trig == Trig::cos ? std::cos(th) : std::sin(th);
    return imag ? cplx(0.0, v) : cplx(v, 0.0);
  });
}

// ---------------------------------------------------------------------------

namespace {

// Full 2D DFT of a torus field; out[m1 * n2 + m2] = sum f e^{-i(k x + l y)}
// with the midpoint phase folded in.
std::vector<cplx> dft2(const CField& f) {
  const Grid& g = f.grid();
  const int n1 = g.n1(), n2 = g.n2();
  std::vector<cplx> work(f.values());
  FftBuffer a(std::max(n1, n2)), b(std::max(n1, n2));
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) a[j] = work[i * n2 + j];
    fft(a, b, n2, FFTW_FORWARD);
    for (int j = 0; j < n2; ++j) work[i * n2 + j] = b[j];
  }
  for (int j = 0; j < n2; ++j) {
    for (int i = 0; i < n1; ++i) a[i] = work[i * n2 + j];
    fft(a, b, n1, FFTW_FORWARD);
    for (int i = 0; i < n1; ++i) work[i * n2 + j] = b[i];
  }
  const double h1 = g.step(1), h2 = g.step(2);
  for (int m1 = 0; m1 < n1; ++m1) {
    for (int m2 = 0; m2 < n2; ++m2) {
      const int k = signed_mode(m1, n1), l = signed_mode(m2, n2);
      work[m1 * n2 + m2] *= std::polar(1.0, -(k * h1 + l * h2) / 2.0);
    }
  }
  return work;
}

CField idft2(std::vector<cplx> work, const Grid& g) {
  const int n1 = g.n1(), n2 = g.n2();
  const double h1 = g.step(1), h2 = g.step(2);
  for (int m1 = 0; m1 < n1; ++m1) {
    for (int m2 = 0; m2 < n2; ++m2) {
      const int k = signed_mode(m1, n1), l = signed_mode(m2, n2);
      work[m1 * n2 + m2] *= std::polar(1.0, (k * h1 + l * h2) / 2.0);
    }
  }
  FftBuffer a(std::max(n1, n2)), b(std::max(n1, n2));
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) a[j] = work[i * n2 + j];
    fft(a, b, n2, FFTW_BACKWARD);
    for (int j = 0; j < n2; ++j) work[i * n2 + j] = b[j];
  }
  for (int j = 0; j < n2; ++j) {
    for (int i = 0; i < n1; ++i) a[i] = work[i * n2 + j];
    fft(a, b, n1, FFTW_BACKWARD);
    for (int i = 0; i < n1; ++i) work[i * n2 + j] = b[i];
  }
  CField out(g);
  for (int k = 0; k < g.size(); ++k) out[k] = work[k];
  return out;
}

void require_torus(const Grid& g, const char* what) {
  if (g.chart() != Chart::torus) throw UnsupportedError(std::string(what) + ": torus grid required");
}

}  // namespace

ModeMap fourier_decompose(const CField& f, double drop_tol) {
  const Grid& g = f.grid();
  require_torus(g, "fourier_decompose");
  const std::vector<cplx> c = dft2(f);
  const double inv = 1.0 / g.size();
  ModeMap out;
  out.n1 = g.n1();
  out.n2 = g.n2();
  double cmax = 0.0;
  for (const cplx& x : c) cmax = std::max(cmax, std::abs(x) * inv);
  for (int m1 = 0; m1 < g.n1(); ++m1) {
    for (int m2 = 0; m2 < g.n2(); ++m2) {
      const int k = signed_mode(m1, g.n1()), l = signed_mode(m2, g.n2());
      if (2 * k == -g.n1() || 2 * l == -g.n2()) continue;
      const cplx v = c[m1 * g.n2() + m2] * inv;
      if (std::abs(v) <= drop_tol * cmax) continue;
      out.modes[{k, l}] = v;
    }
  }
  return out;
}

CField fourier_reconstruct(const ModeMap& m, const Grid& g) {
  require_torus(g, "fourier_reconstruct");
  std::vector<cplx> c(g.size(), cplx(0.0, 0.0));
  for (const auto& [kl, v] : m.modes) {
    const auto [k, l] = kl;
    if (2 * std::abs(k) >= g.n1() || 2 * std::abs(l) >= g.n2()) {
      throw IndexError("fourier_reconstruct: mode outside the grid band");
    }
    const int m1 = (k + g.n1()) % g.n1(), m2 = (l + g.n2()) % g.n2();
    c[m1 * g.n2() + m2] = v;
  }
  return idft2(std::move(c), g);
}

CField spectral_apply(const CField& f, const std::function<cplx(int, int)>& symbol) {
  const Grid& g = f.grid();
  require_torus(g, "spectral_apply");
  std::vector<cplx> c = dft2(f);
  const double inv = 1.0 / g.size();
  // Coefficients at roundoff level are zeroed so that steep symbols such as
  // |kappa|^4 do not amplify transform noise.
  double cmax = 0.0;
  for (const cplx& v : c) cmax = std::max(cmax, std::abs(v));
  const double chop = kSpectralChop * cmax;
  for (int m1 = 0; m1 < g.n1(); ++m1) {
    for (int m2 = 0; m2 < g.n2(); ++m2) {
      const int k = signed_mode(m1, g.n1()), l = signed_mode(m2, g.n2());
      cplx& v = c[m1 * g.n2() + m2];
      if (2 * k == -g.n1() || 2 * l == -g.n2() || std::abs(v) <= chop) {
        v = 0.0;
      } else {
        v *= symbol(k, l) * inv;
      }
    }
  }
  return idft2(std::move(c), g);
}

RField spectral_apply(const RField& f, const std::function<cplx(int, int)>& symbol) {
  return real_part(spectral_apply(to_complex(f), symbol));
}

void dump_csv(const CField& f, std::ostream& os) {
  const Grid& g = f.grid();
  os << "axis1,axis2,re,im\n";
  const auto old = os.precision(17);
  for (int i = 0; i < g.n1(); ++i)
    for (int j = 0; j < g.n2(); ++j)
      os << g.x1(i) << ',' << g.x2(j) << ',' << f(i, j).real() << ',' << f(i, j).imag() << '\n';
  os.precision(old);
}

void dump_csv(const RField& f, std::ostream& os) { dump_csv(to_complex(f), os); }

}  // namespace amspace
