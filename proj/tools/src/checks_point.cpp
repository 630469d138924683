#include <cmath>
#include <limits>
#include <sstream>

#include "amspace/amgeom.hpp"
#include "amspace/app/checks.hpp"
#include "amspace/pointgeom.hpp"
#include "sampling.hpp"

namespace amspace::app {

namespace sm = sampling;

namespace {

std::string label(const WeakStructure& s) {
  std::ostringstream os;
  os << to_string(s.kind);
  if (s.kind == StructureKind::dewitt || (s.kind == StructureKind::flat && s.alpha != 0.0)) os << "(" << s.alpha << ")";
  return os.str();
}

// Worst Richardson order over a batch. A batch that sits at roundoff for
// every instance is reported by its largest error instead.
struct OrderBatch {
  double worst = std::numeric_limits<double>::infinity();
  double max_err = 0.0;
  int exact = 0, total = 0;

  void add(const ConvergenceReport& r) {
    ++total;
    max_err = std::max(max_err, r.err_h);
    if (r.exact) {
      ++exact;
    } else {
      worst = std::min(worst, r.order);
    }
  }

  Row row(const std::string& id, const std::string& inputs) const {
    std::ostringstream note;
    note << exact << " of " << total << " at roundoff";
    Row r = exact == total ? bound(id, inputs, max_err, 1e-9) : bound(id, inputs, worst, 1.9, Test::at_least);
    r.note = note.str();
    return r;
  }
};

const std::vector<WeakStructure>& all_structures() {
  static const std::vector<WeakStructure> v = {
      WeakStructure::flat(0.3),   WeakStructure::conformal(),   WeakStructure::homogeneous(),
      WeakStructure::dewitt(0.0), WeakStructure::dewitt(0.7),   WeakStructure::canonical(),
      WeakStructure::non_riemannian()};
  return v;
}

// Structures with a closed-form geodesic.
const std::vector<WeakStructure>& geodesic_structures() {
  static const std::vector<WeakStructure> v = {WeakStructure::homogeneous(), WeakStructure::canonical(),
                                               WeakStructure::dewitt(0.7), WeakStructure::non_riemannian()};
  return v;
}

Mat m2(double a, double b, double c, double d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

std::vector<Row> geodesic_rows(std::uint64_t seed) {
  sm::Rng rng(seed ^ 0x6765u);
  std::vector<Row> rows;
  for (const WeakStructure& s : geodesic_structures()) {
    OrderBatch b;
    for (int rep = 0; rep < 10; ++rep) {
      const int n = sm::uniform_int(rng, 2, 4);
      const SpdMatrix g0 = sm::spd_mild(rng, n);
      const Mat a = 0.5 * sm::sym(rng, n);
      b.add(fd_geodesic_check(s, g0, a, 0.7));
    }
    rows.push_back(b.row("geodesic-order/" + label(s), "10 random (g0, a0), n in 2..4, t = 0.7"));
  }
  // sqrt(det g_t / det g0) = q^2 + r^2 t^2 for tr A = 0
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const int n = sm::uniform_int(rng, 2, 5);
    const SpdMatrix g0 = sm::spd_mild(rng, n);
    Mat a = sm::sym(rng, n);
    a -= ((g0.mat().inverse() * a).trace() / n) * g0.mat();
    const double t = sm::uniform(rng, -2, 2);
    const Mat gt = geodesic_point(WeakStructure::canonical(), g0, a, t).mat();
    const double vol = std::sqrt(gt.determinant() / g0.mat().determinant());
    const Mat A = g0.mat().inverse() * a;
    const double r = 0.25 * std::sqrt(n * (A * A).trace());
    worst = std::max(worst, std::abs(vol - (1 + r * r * t * t)) / (1 + r * r * t * t));
  }
  rows.push_back(bound("volume-factor/canonical", "50 random traceless a0, t in [-2, 2]", worst, 1e-10));
  return rows;
}

std::vector<Row> am_geodesic_rows(std::uint64_t seed, int n) {
  sm::Rng rng(seed ^ 0x616du);
  std::vector<Row> rows;
  OrderBatch b;
  double closed = 0.0, defect = 0.0;
  for (int rep = 0; rep < 4; ++rep) {
    const Grid g = rep % 2 ? Grid::torus(n, n) : Grid::sphere(n, n);
    const AssocPair base = base_pair(g);
    const MField P = complex_to_operator(sm::cayley_scalar(rng, g));
    const AssocPair at = cayley_to_pair(P, base);
    MField a = tangent_push(complex_to_operator(sm::band_limited(rng, g)), P, base);
    MField A(g);
    for (int k = 0; k < g.size(); ++k) A[k] = at.g[k].inverse() * a[k];
    a *= 1.0 / sm::sup_mat(A);
    const double t = 0.6;
    const AssocPair gt = am_geodesic(at, a, t);
    defect = std::max(defect, pair_defects(gt).max());
    for (int k = 0; k < g.size(); k += std::max(1, g.size() / 16)) {
      const SpdMatrix gk(Mat(at.g[k]));
      b.add(fd_geodesic_check(WeakStructure::homogeneous(), gk, Mat(a[k]), t));
      const Mat c = geodesic_point(WeakStructure::homogeneous(), gk, Mat(a[k]), t).mat();
      closed = std::max(closed, (c - Mat(gt.g[k])).norm() / c.norm());
    }
  }
  rows.push_back(b.row("am-geodesic/order", "g e^{tA} at 16 points of 4 random fields, t = 0.6"));
  rows.push_back(bound("am-geodesic/closed-form", "g e^{tA} against the pointwise homogeneous geodesic", closed, 1e-12));
  rows.push_back(bound("am-geodesic/pair-defects", "g_t = omega J_t along the geodesic", defect, 1e-10));
  return rows;
}

std::vector<Row> connection_curvature_rows(std::uint64_t seed, int instances) {
  sm::Rng rng(seed ^ 0x6375u);
  std::vector<Row> rows;
  for (const WeakStructure& s : all_structures()) {
    OrderBatch b;
    for (int rep = 0; rep < instances; ++rep) {
      const int n = sm::uniform_int(rng, 2, 4);
      const SpdMatrix g = sm::spd_mild(rng, n);
      const Mat a = sm::sym(rng, n), bb = sm::sym(rng, n), c = sm::sym(rng, n);
      b.add(fd_curvature_check(s, g, a, bb, c, 1e-2));
    }
    rows.push_back(b.row("curvature-order/" + label(s), std::to_string(instances) + " random (g, a, b, c), h = 1e-2"));
  }
  return rows;
}

std::vector<Row> point_structure_rows(std::uint64_t seed) {
  sm::Rng rng(seed ^ 0x7073u);
  std::vector<Row> rows;
  const SpdMatrix id(Mat::Identity(2, 2));
  const Mat a = m2(0, 1, 1, 0), b = m2(1, 0, 0, -1);
  for (const WeakStructure& s : all_structures()) {
    if (s.kind == StructureKind::non_riemannian) {
      // no inner product; Q(a,b) = tr A tr B is parallel instead
      double worst = std::numeric_limits<double>::infinity();
      for (int rep = 0; rep < 10; ++rep) {
        const SpdMatrix g = sm::spd_mild(rng, 3);
        const Mat x = sm::sym(rng, 3), y = sm::sym(rng, 3), z = sm::sym(rng, 3);
        const double r1 = q_leibniz_residual(g, x, y, z, 1e-2), r2 = q_leibniz_residual(g, x, y, z, 5e-3);
        worst = std::min(worst, std::log2(r1 / r2));
      }
      rows.push_back(bound("q-leibniz-order/" + label(s), "10 random (g, x, b, c), h = 1e-2, 5e-3", worst, 1.9,
                           Test::at_least));
      continue;
    }
    const double k = sectional_curvature_point(s, id, a, b);
    // Gram quotient assembled from the tensor and the inner product
    const Mat rb = curvature_tensor(s, id, a, b, b);
    const double gram = inner_product_point(s, id, a, a) * inner_product_point(s, id, b, b) -
                        std::pow(inner_product_point(s, id, a, b), 2);
    const double direct = inner_product_point(s, id, rb, a) / gram;
    Row r = s.kind == StructureKind::homogeneous
                ? compare("sectional/" + label(s), "g = I, a = [[0,1],[1,0]], b = diag(1,-1)", k, -0.5, 1e-14)
                : compare("sectional/" + label(s), "g = I, a = [[0,1],[1,0]], b = diag(1,-1)", k, direct, 1e-12,
                          Test::abs);
    rows.push_back(r);
  }
  const double c0 = sectional_curvature_point(WeakStructure::canonical(), id, a, b);
  rows.push_back(compare("sectional/dewitt(0)-vs-canonical", "g = I, same pair",
                         sectional_curvature_point(WeakStructure::dewitt(0.0), id, a, b), c0, 0.0, Test::abs));
  for (Row& r : connection_curvature_rows(seed, 10)) rows.push_back(std::move(r));
  for (Row& r : geodesic_rows(seed)) rows.push_back(std::move(r));
  return rows;
}

}  // namespace amspace::app
