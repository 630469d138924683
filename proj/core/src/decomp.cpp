#include "amspace/decomp.hpp"

#include <cmath>
#include <sstream>

#include "amspace/errors.hpp"

namespace amspace {

namespace {

void require_torus(const Grid& g, const char* what) {
  if (g.chart() != Chart::torus) throw UnsupportedError(std::string(what) + ": only the flat torus is supported");
}

RField component(const VField& v, int c) {
  return map(v, [c](const Vec2& x) { return x(c); });
}

RField spectral(const RField& f, double (*sym)(int, int)) {
  return spectral_apply(f, [sym](int k, int l) { return cplx(sym(k, l), 0.0); });
}

}  // namespace

MField alpha_op(const VField& X, const MField& g) { return 0.5 * lie_metric(X, g); }

VField hamiltonian_field(const RField& F, const AssocPair& at) {
  const VField grad = gradient(F, at.g);
  return zip(at.J, grad, [](const Mat2& J, const Vec2& v) { return Vec2(J * v); });
}

RField e_apply(const RField& f) {
  require_torus(f.grid(), "e_apply");
  return spectral_apply(f, [](int k, int l) {
    const double q = k * k + l * l;
    return cplx(0.5 * q * q, 0.0);
  });
}

RField e_inverse(const RField& f) {
  require_torus(f.grid(), "e_inverse");
  const double area = 4.0 * std::acos(-1.0) * std::acos(-1.0);
  const double mean = integrate(f) / area;
  if (std::abs(mean) > 1e-10 * (1.0 + sup_norm(f))) {
    std::ostringstream os;
    os << "e_inverse: input has nonzero mean " << mean << " (constants are the kernel)";
    throw KernelError(os.str());
  }
  return spectral_apply(f, [](int k, int l) {
    const double q = k * k + l * l;
    return cplx(q == 0.0 ? 0.0 : 2.0 / (q * q), 0.0);
  });
}

RField div_j_delta(const MField& h) {
  const AssocPair b = base_pair(h.grid());
  const VField d = divergence_form(h, b.g);
  const VField jd = zip(b.J, d, [](const Mat2& J, const Vec2& v) { return Vec2(J * v); });
  return vector_divergence(jd, b.g);
}

RField e_factorized(const RField& f) {
  require_torus(f.grid(), "e_factorized");
  const AssocPair b = base_pair(f.grid());
  return div_j_delta(alpha_op(hamiltonian_field(f, b), b.g));
}

RField horizontal_residual(const MField& h) { return -div_j_delta(h); }

MField vertical_project(const MField& h) {
  require_torus(h.grid(), "vertical_project");
  const AssocPair b = base_pair(h.grid());
  const RField F = e_inverse(div_j_delta(h));
  return alpha_op(hamiltonian_field(F, b), b.g);
}

double flat_pairing(const MField& a, const MField& b) {
  return integrate(zip(a, b, [](const Mat2& x, const Mat2& y) { return (x * y).trace(); }));
}

SplitResult berger_ebin_split(const MField& h, SplitKind kind) {
  require_torus(h.grid(), "berger_ebin_split");
  const AssocPair b = base_pair(h.grid());
  SplitResult out{kind, MField(h.grid()), MField(h.grid()), VField(h.grid()), std::nullopt};
  if (kind == SplitKind::hamiltonian) {
    const RField F = e_inverse(div_j_delta(h));
    out.X = hamiltonian_field(F, b);
    out.F = F;
  } else {
    // delta alpha X = 1/2 (kappa kappa^T + |kappa|^2) X per mode; invert with
    // (2/|kappa|^2) I - kappa kappa^T / |kappa|^4.
    const VField d = divergence_form(h, b.g);
    const RField dx = component(d, 0), dy = component(d, 1);
    const RField a = spectral(dx, [](int k, int l) { const double q = k * k + l * l; return q == 0 ? 0.0 : 2.0 / q; });
    const RField kk_x = spectral(dx, [](int k, int l) { const double q = k * k + l * l; return q == 0 ? 0.0 : k * k / (q * q); });
    const RField kl_y = spectral(dy, [](int k, int l) { const double q = k * k + l * l; return q == 0 ? 0.0 : k * l / (q * q); });
    const RField c = spectral(dy, [](int k, int l) { const double q = k * k + l * l; return q == 0 ? 0.0 : 2.0 / q; });
    const RField kl_x = spectral(dx, [](int k, int l) { const double q = k * k + l * l; return q == 0 ? 0.0 : k * l / (q * q); });
    const RField ll_y = spectral(dy, [](int k, int l) { const double q = k * k + l * l; return q == 0 ? 0.0 : l * l / (q * q); });
    for (int p = 0; p < h.size(); ++p) {
      out.X[p] = Vec2(a[p] - kk_x[p] - kl_y[p], c[p] - kl_x[p] - ll_y[p]);
    }
  }
  out.lie_part = alpha_op(out.X, b.g);
  out.h0 = h - out.lie_part;
  return out;
}

}  // namespace amspace
