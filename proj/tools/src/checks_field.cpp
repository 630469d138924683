#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "amspace/amgeom.hpp"
#include "amspace/app/checks.hpp"
#include "amspace/decomp.hpp"
#include "amspace/quotient.hpp"
#include "sampling.hpp"

namespace amspace::app {

namespace sm = sampling;
using std::numbers::pi;
using Fn = std::function<cplx(double, double)>;

namespace {

MField form(const Grid& g, const Fn& alpha) { return alpha_to_form(sample(g, alpha)); }

double sectional(const Grid& g, const Fn& a, const Fn& b) { return am_sectional(form(g, a), form(g, b), base_pair(g)); }

// Torus sectional curvature straight from the complex-frame formulas,
// tr(A B) = 2 Re(conj(alpha) beta) and tr([A,B]^2) = -8 Im(conj(alpha) beta)^2,
// summed with the trapezoid rule (exact for trigonometric polynomials).
double torus_oracle(const Fn& a, const Fn& b, int m = 64) {
  double aa = 0.0, bb = 0.0, ab = 0.0, num = 0.0;
  const double h = 2 * pi / m;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const cplx al = a(i * h, j * h), be = b(i * h, j * h);
      const cplx c = std::conj(al) * be;
      aa += 2 * std::norm(al);
      bb += 2 * std::norm(be);
      ab += 2 * c.real();
      num += -2 * c.imag() * c.imag();
    }
  }
  return num / ((aa * bb - ab * ab) * h * h);
}

// Spectral derivatives amplify roundoff by about n^order; tolerances are set at n = 128.
double roundoff_scale(int n, int order = 4) { return std::max(1.0, std::pow(n / 128.0, order)); }

double band_sup(const RField& f, double zmax = 0.9) {
  double e = 0.0;
  const Grid& g = f.grid();
  for (int i = 0; i < g.n1(); ++i)
    for (int j = 0; j < g.n2(); ++j)
      if (g.chart() == Chart::torus || std::abs(g.x2(j)) <= zmax) e = std::max(e, std::abs(f(i, j)));
  return e;
}

RField mul(const RField& a, const RField& b) { return zip(a, b, [](double x, double y) { return x * y; }); }

RField div_j(const VField& v) {
  const AssocPair b = base_pair(v.grid());
  return vector_divergence(zip(b.J, v, [](const Mat2& J, const Vec2& x) { return Vec2(J * x); }), b.g);
}

AssocPair associated(const CField& p) { return cayley_to_pair(complex_to_operator(p), base_pair(p.grid())); }

Grid alternating(int rep, int n) { return rep % 2 ? Grid::torus(n, n) : Grid::sphere(n, n); }

// u = f(x) + g(y), v = p(x+y) + q(x-y): horizontal at the flat torus
MField random_horizontal(sm::Rng& rng, const Grid& t) {
  struct Term {
    int which, k;
    double c, s;
  };
  std::vector<Term> terms;
  for (int n = 0; n < 5; ++n) {
    const int which = sm::uniform_int(rng, 0, 3), k = sm::uniform_int(rng, 1, 3);
    const double c = sm::normal(rng), s = sm::normal(rng);
    terms.push_back({which, k, c, s});
  }
  return form(t, [&](double x, double y) {
    double u = 0.0, v = 0.0;
    for (const Term& m : terms) {
      const double arg = m.which == 0 ? x : m.which == 1 ? y : m.which == 2 ? x + y : x - y;
      (m.which < 2 ? u : v) += m.c * std::cos(m.k * arg) + m.s * std::sin(m.k * arg);
    }
    return cplx(u, v);
  });
}

Row printed_row(std::string id, std::string inputs, double computed, double printed, double tol) {
  Row r = compare(std::move(id), std::move(inputs), computed, printed, tol);
  r.printed = printed;
  return r;
}

Row flagged_row(std::string id, std::string inputs, double computed, double printed, double reference, double tol,
                std::string note) {
  Row r = compare(std::move(id), std::move(inputs), computed, reference, tol);
  r.printed = printed;
  r.flag = kTypoFlag;
  r.note = std::move(note);
  return r;
}

double part1(int k, int l) { return 3.0 / (8 * pi * pi) * k * k * l * l / std::pow(k * k + l * l, 2); }

std::string kl(const char* a, int k, const char* b, int l) {
  std::ostringstream os;
  os << a << "=" << k << " " << b << "=" << l;
  return os.str();
}

}  // namespace

std::vector<Row> sphere_curvature_rows(int n) {
  const Grid s = Grid::sphere(n, n);
  const AssocPair b = base_pair(s);
  const double k8 = -1 / (8 * pi), k16 = -3 / (16 * pi);
  std::vector<Row> rows;
  auto cos_piz = [](double, double z) { return cplx(std::cos(pi * z), 0); };
  auto one = [](double, double) { return cplx(1, 0); };
  rows.push_back(printed_row("sphere/sectional/cos(pi z),i cos(2 pi z)", "alpha = cos pi z, beta = i cos 2 pi z",
                             sectional(s, cos_piz, [](double, double z) { return cplx(0, std::cos(2 * pi * z)); }), k8,
                             1e-8));
  rows.push_back(printed_row("sphere/sectional/1,i cos(pi z + phi)", "alpha = 1, beta = i cos(pi z + phi)",
                             sectional(s, one, [](double p, double z) { return cplx(0, std::cos(pi * z + p)); }), k8,
                             1e-8));
  rows.push_back(printed_row("sphere/sectional/cos(pi z),i cos(pi z)", "alpha = cos pi z, beta = i cos pi z",
                             sectional(s, cos_piz, [](double, double z) { return cplx(0, std::cos(pi * z)); }), k16,
                             1e-8));
  rows.push_back(printed_row("sphere/sectional/1,i", "alpha = 1, beta = i",
                             sectional(s, one, [](double, double) { return cplx(0, 1); }), k8, 1e-8));
  rows.push_back(printed_row("sphere/holomorphic/1", "alpha = 1", am_holomorphic_sectional(form(s, one), b), k8, 1e-8));
  rows.push_back(printed_row(
      "sphere/holomorphic/cos(pi z + phi)", "alpha = cos(pi z + phi)",
      am_holomorphic_sectional(form(s, [](double p, double z) { return cplx(std::cos(pi * z + p), 0); }), b), k16,
      1e-8));
  return rows;
}

std::vector<Row> holomorphic_bound_rows(std::uint64_t seed, int n, int samples) {
  sm::Rng rng(seed ^ 0x686fu);
  const Grid s = Grid::sphere(n, n);
  const AssocPair base = base_pair(s);
  double worst = -std::numeric_limits<double>::infinity();
  for (int rep = 0; rep < samples; ++rep) {
    const MField P = complex_to_operator(sm::cayley_scalar(rng, s, 0.8));
    const AssocPair at = cayley_to_pair(P, base);
    const MField h = tangent_push(complex_to_operator(sm::band_limited(rng, s)), P, base);
    worst = std::max(worst, am_holomorphic_sectional(h, at));
  }
  const double bound_value = -1 / (8 * pi);
  Row r = bound("sphere/holomorphic-bound", std::to_string(samples) + " random (p, alpha), sup |p| <= 0.8", worst,
                bound_value + 1e-9);
  r.reference = bound_value;
  r.note = "largest K(h, Jh) over the samples";
  return {r};
}

std::vector<Row> torus_curvature_rows(int n) {
  const Grid t = Grid::torus(n, n);
  const AssocPair b = base_pair(t);
  const double p2 = pi * pi;
  std::vector<Row> rows;
  const Fn cosx = [](double x, double) { return cplx(std::cos(x), 0); };
  const Fn one = [](double, double) { return cplx(1, 0); };
  const Fn i_cos2y = [](double, double y) { return cplx(0, std::cos(2 * y)); };
  const Fn i_cosx = [](double x, double) { return cplx(0, std::cos(x)); };
  const Fn ii = [](double, double) { return cplx(0, 1); };
  rows.push_back(printed_row("torus/sectional/cos x,i cos 2y", "alpha = cos x, beta = i cos 2y",
                             sectional(t, cosx, i_cos2y), -1 / (8 * p2), 1e-8));
  rows.push_back(printed_row("torus/sectional/cos x,i cos x", "alpha = cos x, beta = i cos x",
                             sectional(t, cosx, i_cosx), -3 / (16 * p2), 1e-8));
  rows.push_back(printed_row("torus/sectional/1,i", "alpha = 1, beta = i", sectional(t, one, ii), -1 / (8 * p2), 1e-8));
  rows.push_back(printed_row("torus/holomorphic/cos x", "alpha = cos x", am_holomorphic_sectional(form(t, cosx), b),
                             -3 / (16 * p2), 1e-8));
  rows.push_back(
      printed_row("torus/holomorphic/1", "alpha = 1", am_holomorphic_sectional(form(t, one), b), -1 / (8 * p2), 1e-8));
  struct Exp {
    const char* id;
    const char* inputs;
    Fn a, b;
    double printed;
  };
  const std::vector<Exp> exps = {
      {"torus/exponential/e^{ix},e^{iy}", "alpha = e^{ix}, beta = e^{iy}", [](double x, double) { return std::polar(1.0, x); },
       [](double, double y) { return std::polar(1.0, y); }, -1 / (16 * pi)},
      {"torus/exponential/e^{i(x+2y)},e^{i(2x-y)}", "alpha = e^{i(x+2y)}, beta = e^{i(2x-y)}",
       [](double x, double y) { return std::polar(1.0, x + 2 * y); },
       [](double x, double y) { return std::polar(1.0, 2 * x - y); }, -1 / (16 * pi)},
      {"torus/exponential/e^{ix},i e^{ix}", "alpha = e^{ix}, beta = i e^{ix}", [](double x, double) { return std::polar(1.0, x); },
       [](double x, double) { return cplx(0, 1) * std::polar(1.0, x); }, -1 / (8 * pi)},
      {"torus/exponential/e^{ix},-i e^{ix}", "alpha = e^{ix}, beta = -i e^{ix}",
       [](double x, double) { return std::polar(1.0, x); },
       [](double x, double) { return cplx(0, -1) * std::polar(1.0, x); }, -1 / (8 * pi)},
  };
  for (const Exp& e : exps) {
    const double oracle = torus_oracle(e.a, e.b);
    rows.push_back(flagged_row(e.id, e.inputs, sectional(t, e.a, e.b), e.printed, oracle, 1e-8,
                               "printed constant carries 1/pi; the quadrature oracle gives 1/pi^2"));
  }
  return rows;
}

std::vector<Row> quotient_rows(int n) {
  const Grid t = Grid::torus(n, n);
  std::vector<Row> rows;
  auto real_x = [&](int k) { return form(t, [k](double x, double) { return cplx(std::cos(k * x), 0); }); };
  auto real_y = [&](int l) { return form(t, [l](double, double y) { return cplx(std::cos(l * y), 0); }); };
  auto imag_sum = [&](int p) { return form(t, [p](double x, double y) { return cplx(0, std::cos(p * (x + y))); }); };
  auto imag_diff = [&](int q) { return form(t, [q](double x, double y) { return cplx(0, std::cos(q * (x - y))); }); };
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l)
      rows.push_back(printed_row("quotient/real/cos kx,cos ly " + kl("k", k, "l", l), "alpha = cos kx, beta = cos ly",
                                 quotient_sectional(real_x(k), real_y(l)), part1(k, l), 1e-6));
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      const double printed = 3.0 / (32 * pi * pi) * p * p * q * q / std::pow(p * p + q * q, 2);
      const double k = quotient_sectional(imag_sum(p), imag_diff(q));
      std::ostringstream note;
      note.precision(6);
      note << "computed/printed = " << k / printed << "; the 45 degree rotation of the torus maps this family onto "
           << "the real one";
      rows.push_back(flagged_row("quotient/imaginary/i cos p(x+y),i cos q(x-y) " + kl("p", p, "q", q),
                                 "alpha = i cos p(x+y), beta = i cos q(x-y)", k, printed, part1(p, q), 1e-6,
                                 note.str()));
    }
  }
  for (int k = 1; k <= 3; ++k)
    for (int p = 1; p <= 3; ++p)
      rows.push_back(printed_row("quotient/mixed/cos kx,i cos p(x+y) " + kl("k", k, "p", p),
                                 "alpha = cos kx, beta = i cos p(x+y)", quotient_sectional(real_x(k), imag_sum(p)),
                                 1 / (4 * pi * pi), 1e-6));
  // vanishing families
  for (auto [k, l] : {std::pair{1, 2}, std::pair{2, 3}}) {
    Row r = compare("quotient/real/cos kx,cos lx " + kl("k", k, "l", l), "alpha = cos kx, beta = cos lx",
                    quotient_sectional(real_x(k), real_x(l)), 0.0, 1e-12, Test::abs);
    r.printed = 0.0;
    rows.push_back(r);
    Row s = compare("quotient/imaginary/i cos p(x+y),i cos q(x+y) " + kl("p", k, "q", l),
                    "alpha = i cos p(x+y), beta = i cos q(x+y)", quotient_sectional(imag_sum(k), imag_sum(l)), 0.0,
                    1e-12, Test::abs);
    s.printed = 0.0;
    rows.push_back(s);
  }
  // constant factors
  const MField one = form(t, [](double, double) { return cplx(1, 0); });
  const MField ii = form(t, [](double, double) { return cplx(0, 1); });
  rows.push_back(flagged_row("quotient/constant/1,i cos(x+y)", "alpha = 1, beta = i cos(x+y)",
                             quotient_sectional(one, imag_sum(1)), -1 / (8 * pi), 1 / (4 * pi * pi), 1e-6,
                             "div J{a,b} = -4 cos(x+y) is not zero; the value is K + 3/(8 pi^2)"));
  rows.push_back(flagged_row("quotient/constant/cos x,i", "alpha = cos x, beta = i", quotient_sectional(real_x(1), ii),
                             -1 / (8 * pi), 1 / (4 * pi * pi), 1e-6,
                             "div J{a,b} = -2 cos x is not zero; the value is K + 3/(8 pi^2)"));
  rows.push_back(flagged_row("quotient/constant/1,i", "alpha = 1, beta = i", quotient_sectional(one, ii), -1 / (8 * pi),
                             -1 / (8 * pi * pi), 1e-8, "the brace vanishes; the value is K = -1/(8 pi^2)"));
  return rows;
}

std::vector<Row> quotient_property_rows(std::uint64_t seed, int n) {
  sm::Rng rng(seed ^ 0x7175u);
  const Grid t = Grid::torus(n, n);
  const AssocPair base = base_pair(t);
  double anti = 0.0, ineq = std::numeric_limits<double>::infinity(), ident = 0.0, scale = 0.0, vert = 0.0;
  int strict = 0;
  const int reps = 6;
  for (int rep = 0; rep < reps; ++rep) {
    const MField a = random_horizontal(rng, t), b = random_horizontal(rng, t);
    const VField ab = brace(a, b), ba = brace(b, a);
    anti = std::max(anti, sm::sup_vec(ab + ba) / (1 + sm::sup_vec(ab)));
    const QuotientCurvature q = quotient_curvature(a, b);
    ineq = std::min(ineq, q.total() - q.horizontal);
    if (sup_norm(div_j(ab)) > 1e-6 && q.total() > q.horizontal) ++strict;
    const double wedge = am_inner(a, a, base) * am_inner(b, b, base) - std::pow(am_inner(a, b, base), 2);
    const MField v = vertical_bracket(a, b);
    const double direct = 0.75 * am_inner(v, v, base) / wedge;
    ident = std::max(ident, std::abs(q.correction - direct) / std::max(std::abs(direct), 1e-300));
    vert = std::max(vert, sm::sup_diff(vertical_project(v), v) / (1 + sm::sup_mat(v)));
    if (rep == 0) {
      for (double lam : {0.5, 2.0, 10.0})
        for (double mu : {0.5, 2.0, 10.0})
          scale = std::max(scale, std::abs(quotient_sectional(lam * a, mu * b) - q.total()) / std::abs(q.total()));
    }
  }
  const std::string in = std::to_string(reps) + " random horizontal pairs";
  std::vector<Row> rows;
  rows.push_back(bound("quotient-property/brace-antisymmetry", in, anti, 1e-12));
  Row r = bound("quotient-property/oneill-inequality", in, ineq, 0.0, Test::at_least);
  r.note = std::to_string(strict) + " of " + std::to_string(reps) + " strict";
  rows.push_back(r);
  rows.push_back(bound("quotient-property/correction-identity", in + ", against |[a,b]^V|^2", ident, 1e-8));
  rows.push_back(bound("quotient-property/vertical-bracket", in + ", fixed by the vertical projector", vert, 1e-8));
  rows.push_back(bound("quotient-property/scale-invariance", "lambda, mu in {0.5, 2, 10}", scale, 1e-10));
  return rows;
}

std::vector<Row> gaussian_curvature_rows(std::uint64_t seed, int n) {
  std::vector<Row> rows;
  {
    const Grid t = Grid::torus(n, n);
    const double tt = 0.3;
    const int k = 1, l = 2;
    const AssocPair p = associated(sample(t, [&](double x, double y) { return tt * std::polar(1.0, k * x + l * y); }));
    const RField K = gaussian_curvature(p.g);
    const RField ref = sample(t, [&](double x, double y) {
      return -(tt / (1 - tt * tt)) * ((k * k - l * l) * std::cos(k * x + l * y) - 2 * k * l * std::sin(k * x + l * y));
    });
    rows.push_back(bound("gaussian/exponential-cayley", "p = 0.3 e^{i(x + 2y)}, sup relative error",
                         sup_norm(K - ref) / sup_norm(ref), 1e-4));
  }
  {
    // the pole rows of the stencil need 128 points before K settles
    const int m = std::max(n, 128);
    const Grid s = Grid::sphere(m, m);
    const RField K = gaussian_curvature(base_pair(s).g);
    rows.push_back(bound("gaussian/round-sphere", "K - 1 on |z| <= 0.9, grid " + std::to_string(m),
                         band_sup(K - RField(s, 1.0)), 1e-4));
  }
  sm::Rng rng(seed ^ 0x6762u);
  double gb = 0.0;
  const int m = std::max(n, 64);  // products of the Cayley modes alias below this
  for (int rep = 0; rep < 5; ++rep) {
    const Grid t = Grid::torus(m, m);
    const AssocPair p = associated(sm::cayley_scalar(rng, t, 0.6));
    gb = std::max(gb, std::abs(integrate(mul(gaussian_curvature(p.g), sqrt_det(p.g)))));
  }
  rows.push_back(bound("gaussian/gauss-bonnet-torus", "integral of K over 5 random associated metrics, grid " + std::to_string(m), gb, 1e-8));
  return rows;
}

std::vector<Row> cayley_rows(std::uint64_t seed, int n, int samples) {
  sm::Rng rng(seed ^ 0x6361u);
  double round = 0.0, defects = 0.0, bridge = 0.0, change = 0.0, tanh_mat = 0.0, tanh_field = 0.0;
  const Mat2 I = Mat2::Identity();
  for (int rep = 0; rep < samples; ++rep) {
    const Grid g = alternating(rep, n);
    const AssocPair base = base_pair(g);
    const MField P = complex_to_operator(sm::cayley_scalar(rng, g));
    const AssocPair p = cayley_to_pair(P, base);
    defects = std::max(defects, pair_defects(p).max());
    round = std::max(round, sm::sup_diff(cayley_from_pair(p.J, base), P));
    // J = J0 e^Q against the Cayley chart: (1+P)(1-P)^{-1} = e^Q
    CField q = sm::band_limited(rng, g);
    const double scale = sm::uniform(rng, 0.1, 2.0) / sup_norm(q);
    for (auto& v : q.values()) v *= scale;
    const MField Q = complex_to_operator(q);
    MField J(g);
    for (int k = 0; k < g.size(); ++k) J[k] = base.J[k] * exp2x2(Q[k]);
    const MField Pq = cayley_from_pair(J, base);
    for (int k = 0; k < g.size(); ++k) {
      const Mat2 E = exp2x2(Q[k]);
      bridge = std::max(bridge, ((I + Pq[k]) * (I - Pq[k]).inverse() - E).norm() / E.norm());
    }
    // change of base between two Cayley charts
    const AssocPair b1 = cayley_to_pair(complex_to_operator(sm::cayley_scalar(rng, g, 0.4)), base);
    const MField K = complex_to_operator(sm::cayley_scalar(rng, g, 0.4));
    const MField P1 = cayley_from_pair(cayley_to_pair(K, base).J, b1);
    for (int k = 0; k < g.size(); ++k) {
      const Mat2 m = (I - K[k]) * (I + K[k]).inverse() * base.J[k] * b1.J[k];
      const Mat2 expect = (I - m).inverse() * (I + m);
      change = std::max(change, (P1[k] - expect).norm() / (1 + expect.norm()));
    }
    // tanh chart path against g0 e^{2tA}
    const MField A = complex_to_operator(sm::band_limited(rng, g));
    const double t = sm::uniform(rng, -1.0, 1.0) / (1 + sm::sup_mat(A));
    const AssocPair viaChart = cayley_to_pair(chart_geodesic(A, t), base);
    MField expect(g);
    for (int k = 0; k < g.size(); ++k) expect[k] = base.g[k] * exp2x2(2 * t * A[k]);
    tanh_field = std::max(tanh_field, sm::sup_diff(viaChart.g, expect) / sm::sup_mat(expect));
  }
  for (int rep = 0; rep < samples; ++rep) {
    const int m = sm::uniform_int(rng, 1, 5);
    const Mat a = sm::sym(rng, m) * sm::uniform(rng, 0.1, 1.0);
    const Mat th = mat_tanh(a);
    const Mat id = Mat::Identity(m, m);
    const Mat lhs = (id + th) * (id - th).inverse();
    const Mat rhs = mat_exp(2.0 * a);
    tanh_mat = std::max(tanh_mat, (lhs - rhs).norm() / rhs.norm());
  }
  const std::string in = std::to_string(samples) + " random fields, sup |p| <= 0.8";
  return {bound("cayley/roundtrip", in, round, 1e-11),
          bound("cayley/pair-invariants", in, defects, 1e-11),
          bound("cayley/exponential-chart", std::to_string(samples) + " random Q, sup |Q| in [0.1, 2]", bridge, 1e-11),
          bound("cayley/change-of-base", std::to_string(samples) + " random chart pairs", change, 1e-10),
          bound("cayley/tanh-bridge-matrix", std::to_string(samples) + " random symmetric A, |A| <= 1", tanh_mat, 1e-11),
          bound("cayley/tanh-bridge-field", std::to_string(samples) + " random chart geodesics", tanh_field, 1e-11)};
}

std::vector<Row> fundamental_form_rows(std::uint64_t seed, int n) {
  sm::Rng rng(seed ^ 0x6666u);
  double anti = 0.0, pos = std::numeric_limits<double>::infinity();
  for (int rep = 0; rep < 20; ++rep) {
    const Grid g = alternating(rep, n);
    const AssocPair base = base_pair(g);
    const MField P = complex_to_operator(sm::cayley_scalar(rng, g));
    const AssocPair at = cayley_to_pair(P, base);
    const MField a = tangent_push(complex_to_operator(sm::band_limited(rng, g)), P, base);
    const MField b = tangent_push(complex_to_operator(sm::band_limited(rng, g)), P, base);
    anti = std::max({anti, std::abs(fundamental_form(a, b, at) + fundamental_form(b, a, at)),
                     std::abs(fundamental_form(a, a, at))});
    pos = std::min(pos, fundamental_form(a, acs_on_am(a, at.J), at));
  }
  double closed = 0.0;
  for (Chart c : {Chart::torus, Chart::sphere}) {
    const Grid g(c, n, n);
    const AssocPair base = base_pair(g);
    const MField A0 = complex_to_operator(CField(g, cplx(0.3, -0.2)));
    const MField A1 = complex_to_operator(CField(g, cplx(0.5, 0.1)));
    const MField A2 = complex_to_operator(CField(g, cplx(-0.2, 0.7)));
    const double h = 1e-4;
    auto d = [&](const MField& x, const MField& y, const MField& z) {
      return (chart_fundamental_form(y, z, h * x, base) - chart_fundamental_form(y, z, -h * x, base)) / (2 * h);
    };
    closed = std::max({closed, std::abs(d(A0, A1, A2)), std::abs(d(A0, A1, A2) + d(A1, A2, A0) + d(A2, A0, A1))});
  }
  Row p = bound("omega/positivity", "min Omega(a, Ja) over 20 random pairs", pos,
                std::numeric_limits<double>::min(), Test::at_least);
  return {bound("omega/antisymmetry", "20 random pairs at random P", anti, 0.0), p,
          bound("omega/closed-at-base", "central differences at P = 0, both charts", closed, 1e-9)};
}

std::vector<Row> projection_rows(std::uint64_t seed, int n) {
  sm::Rng rng(seed ^ 0x7072u);
  std::vector<Row> rows;
  {
    const Grid t = Grid::torus(8, 8);
    const AssocPair p = project_to_associated(MField(t, (Mat2() << 2, 0, 0, 1).finished()));
    Mat2 g, J;
    g << std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0);
    J << 0, -1 / std::sqrt(2.0), std::sqrt(2.0), 0;
    rows.push_back(bound("projection/constant-example", "g' = diag(2, 1)", (p.g[0] - g).norm() + (p.J[0] - J).norm(),
                         1e-15));
  }
  double idem = 0.0, defects = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const Grid g = alternating(rep, n);
    const RField u = sm::band_limited_real(rng, g), v = sm::band_limited_real(rng, g);
    const AssocPair base = base_pair(g);
    MField gp(g);
    for (int k = 0; k < g.size(); ++k) {
      Mat2 s;
      s << 1.5 + 0.3 * std::tanh(u[k]), 0.4 * std::tanh(v[k]), 0.4 * std::tanh(v[k]), 1.0;
      const Mat2 root = sqrt_spd2x2(base.g[k]);
      gp[k] = root * s * root;
    }
    const AssocPair p = project_to_associated(gp);
    defects = std::max(defects, pair_defects(p).max());
    const AssocPair pp = project_to_associated(p.g);
    idem = std::max({idem, sm::sup_diff(pp.g, p.g) / sm::sup_mat(p.g), sm::sup_diff(pp.J, p.J) / sm::sup_mat(p.J)});
  }
  rows.push_back(bound("projection/idempotence", "20 random SPD fields", idem, 1e-12));
  rows.push_back(bound("projection/pair-invariants", "20 random SPD fields", defects, 1e-11 * roundoff_scale(n)));
  double fiber = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const Grid g = alternating(rep, std::min(n, 32));
    const AssocPair at = cayley_to_pair(complex_to_operator(sm::cayley_scalar(rng, g)), base_pair(g));
    const RField s = sm::band_limited_real(rng, g);
    const double amp = sm::uniform(rng, 0.1, 1.0) / (sup_norm(s) + 1e-300);
    MField gp(g);
    for (int k = 0; k < g.size(); ++k) {
      const Mat2 X = amp * s[k] * Mat2::Identity() + 0.3 * amp * s[k] * at.J[k];
      gp[k] = at.g[k] * exp2x2(0.5 * (X + at.J[k] * X * at.J[k].inverse()));
      gp[k] = 0.5 * (gp[k] + gp[k].transpose()).eval();
    }
    const AssocPair p = project_to_associated(gp);
    fiber = std::max({fiber, sm::sup_diff(p.g, at.g) / sm::sup_mat(at.g), sm::sup_diff(p.J, at.J) / sm::sup_mat(at.J)});
  }
  rows.push_back(bound("projection/fiber", "20 random J-commuting perturbations", fiber, 1e-11));
  return rows;
}

std::vector<Row> decomp_rows(std::uint64_t seed, int n) {
  sm::Rng rng(seed ^ 0x6463u);
  const Grid t = Grid::torus(n, n);
  const AssocPair b = base_pair(t);
  double orth = 0.0, recon = 0.0, be_constraint = 0.0, ham_constraint = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    MField h(t);
    if (rep % 2) {
      const RField u = sm::band_limited_real(rng, t, 6, 4), v = sm::band_limited_real(rng, t, 6, 4),
                   w = sm::band_limited_real(rng, t, 6, 4);
      for (int q = 0; q < t.size(); ++q) h[q] << u[q], v[q], v[q], w[q];
    } else {
      h = alpha_to_form(sm::band_limited(rng, t, 6, 4));
    }
    const double hh = flat_pairing(h, h), hs = 1 + sm::sup_mat(h);
    for (SplitKind kind : {SplitKind::berger_ebin, SplitKind::hamiltonian}) {
      const SplitResult s = berger_ebin_split(h, kind);
      recon = std::max(recon, sm::sup_diff(s.h0 + s.lie_part, h) / hs);
      orth = std::max(orth, std::abs(flat_pairing(s.h0, s.lie_part)) / hh);
      if (kind == SplitKind::berger_ebin) {
        be_constraint = std::max(be_constraint, sm::sup_vec(divergence_form(s.h0, b.g)) / hs);
      } else {
        ham_constraint = std::max(ham_constraint, sup_norm(div_j_delta(s.h0)) / hs);
      }
    }
  }
  double efac = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    const RField f = sm::band_limited_real(rng, t, 6, 4);
    const RField ef = e_apply(f);
    efac = std::max(efac, sup_norm(e_factorized(f) - ef) / sup_norm(ef));
  }
  double idem = 0.0, adj = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const MField h = alpha_to_form(sm::band_limited(rng, t, 6, 4)), k = alpha_to_form(sm::band_limited(rng, t, 6, 4));
    const MField hv = vertical_project(h), kv = vertical_project(k);
    idem = std::max(idem, sm::sup_diff(vertical_project(hv), hv) / sm::sup_mat(h));
    adj = std::max(adj, std::abs(am_inner(hv, k, b) - am_inner(h, kv, b)) /
                            std::sqrt(am_inner(h, h, b) * am_inner(k, k, b)));
  }
  return {bound("decomp/orthogonality", "10 random forms, both splits", orth, 1e-9),
          bound("decomp/reconstruction", "10 random forms, both splits", recon, 1e-10),
          bound("decomp/berger-ebin-constraint", "sup |delta h0|", be_constraint, 1e-8),
          bound("decomp/hamiltonian-constraint", "sup |div J delta h*|", ham_constraint, 1e-8 * roundoff_scale(n)),
          bound("decomp/e-factorization", "div J delta alpha J grad against 1/2 Laplacian^2", efac, 1e-9 * roundoff_scale(n)),
          bound("decomp/vertical-idempotent", "10 random anti-Hermitian forms", idem, 1e-9),
          bound("decomp/vertical-self-adjoint", "10 random anti-Hermitian pairs", adj, 1e-9)};
}

std::vector<Row> gradient_rows(std::uint64_t seed, int n) {
  sm::Rng rng(seed ^ 0x6772u);
  const Grid t = Grid::torus(n, n);
  const double eps = 1e-4;
  double grad = 0.0, dr = 0.0, ar = 0.0;
  for (int rep = 0; rep < 3; ++rep) {
    // both sides vanish in two dimensions; measure against the size of the terms
    const MField g = associated(sm::cayley_scalar(rng, t, 0.5)).g;
    const RField u = sm::band_limited_real(rng, t), v = sm::band_limited_real(rng, t), w = sm::band_limited_real(rng, t);
    MField h(t);
    for (int q = 0; q < t.size(); ++q) h[q] << u[q], v[q], v[q], w[q];
    const double fd = (total_scalar(g + eps * h) - total_scalar(g - eps * h)) / (2 * eps);
    const RField r = scalar_curvature(g);
    const RField ric_h = form_dot(ricci(g), h, g);
    RField terms(t);
    for (int q = 0; q < t.size(); ++q) terms[q] = std::abs(0.5 * r[q] * (g[q].inverse() * h[q]).trace()) + std::abs(ric_h[q]);
    grad = std::max(grad, std::abs(fd - gradient_pairing(g, h)) / integrate(mul(terms, sqrt_det(g))));
  }
  for (int rep = 0; rep < 3; ++rep) {
    const AssocPair base = base_pair(t);
    const MField P = complex_to_operator(sm::cayley_scalar(rng, t, 0.5));
    const MField g = cayley_to_pair(P, base).g;
    const MField h = tangent_push(complex_to_operator(sm::band_limited(rng, t, 4, 2)), P, base);
    const RField fd = (1 / (2 * eps)) * (scalar_curvature(g + eps * h) - scalar_curvature(g - eps * h));
    const RField dd = double_divergence(h, g);
    dr = std::max(dr, sup_norm(fd - dd) / (1 + sup_norm(dd)));
  }
  for (int rep = 0; rep < 3; ++rep) {
    const AssocPair p = associated(sm::cayley_scalar(rng, t));
    ar = std::max(ar, sm::sup_mat(aric(p)));
  }
  return {bound("gradient/total-scalar", "3 random (g, h), relative to the term sizes", grad, 1e-3),
          bound("gradient/scalar-variation", "3 random anti-Hermitian h, sup norm", dr, 1e-3),
          bound("gradient/aric", "3 random associated metrics, sup norm", ar, 1e-4)};
}

}  // namespace amspace::app
