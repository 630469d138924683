#include "amspace/quotient.hpp"

#include <cmath>
#include <sstream>

#include "amspace/amgeom.hpp"
#include "amspace/errors.hpp"

namespace amspace {

void require_horizontal(const MField& h, const char* what) {
  if (h.grid().chart() != Chart::torus) throw UnsupportedError(std::string(what) + ": flat torus only");
  // scale by the size of the second derivatives of h
  const auto d2 = partial2(h, 1) + partial2(h, 2);
  double s = 0.0;
  for (const Mat2& m : d2.values()) s = std::max(s, m.norm());
  const double r = sup_norm(horizontal_residual(h));
  if (r > 1e-8 * (1.0 + s)) {
    std::ostringstream os;
    os << what << ": form is not horizontal (residual " << r << ")";
    throw ContractError(os.str());
  }
}

VField brace(const MField& a, const MField& b) {
  require_horizontal(a, "brace");
  require_horizontal(b, "brace");
  const AssocPair base = base_pair(a.grid());
  const MField& g = base.g;
  const VField da = divergence_form(a, g), db = divergence_form(b, g);
  const GammaField ba = box_operator(a, g), bb = box_operator(b, g);
  VField out(a.grid());
  for (int p = 0; p < a.size(); ++p) {
    const Mat2 gi = g[p].inverse();
    const Mat2 au = gi * a[p] * gi, bu = gi * b[p] * gi;  // a^{ij}
    const Mat2 am = gi * a[p], bm = gi * b[p];            // a^k_i
    Vec2 v = am * db[p] - bm * da[p];
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) v(k) += bb[p](k, i, j) * au(i, j) - ba[p](k, i, j) * bu(i, j);
    out[p] = v;
  }
  return out;
}

namespace {

RField div_j(const VField& v) {
  const AssocPair b = base_pair(v.grid());
  const VField jv = zip(b.J, v, [](const Mat2& J, const Vec2& x) { return Vec2(J * x); });
  return vector_divergence(jv, b.g);
}

}  // namespace

MField vertical_bracket(const MField& a, const MField& b) {
  const AssocPair base = base_pair(a.grid());
  const RField F = e_inverse(div_j(brace(a, b)));
  return -1.0 * alpha_op(hamiltonian_field(F, base), base.g);
}

QuotientCurvature quotient_curvature(const MField& a, const MField& b) {
  const AssocPair base = base_pair(a.grid());
  QuotientCurvature q;
  q.horizontal = am_sectional(a, b, base);
  const double aa = am_inner(a, a, base), bb = am_inner(b, b, base), ab = am_inner(a, b, base);
  const double wedge = aa * bb - ab * ab;
  const RField f = div_j(brace(a, b));
  const RField ef = e_inverse(f);
  q.correction = 0.75 * integrate(zip(f, ef, [](double x, double y) { return x * y; })) / wedge;
  return q;
}

double quotient_sectional(const MField& a, const MField& b) { return quotient_curvature(a, b).total(); }

}  // namespace amspace
