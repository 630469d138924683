#pragma once

#include "amspace/fields.hpp"

// Associated metrics g = omega J on a surface with omega = [[0,1],[-1,0]] in
// chart coordinates. Operators anticommuting with J0 are carried either as
// 2x2 chart matrices or as complex scalars: in the orthonormal frame E of g0
// the scalar c stands for [[Re c, -Im c], [-Im c, -Re c]].
namespace amspace {

struct AssocPair {
  MField g;
  MField J;
};

const Mat2& omega();

// (g0, J0): sphere chart g0 = diag(1 - z^2, 1 / (1 - z^2)), torus identity.
AssocPair base_pair(const Grid& grid);
// Columns are the g0-orthonormal frame: sphere diag(1/s, s), s = sqrt(1 - z^2).
MField frame_field(const Grid& grid);

Mat2 complex_to_on(cplx c);
cplx on_to_complex(const Mat2& m);
MField complex_to_operator(const CField& c);
CField operator_to_complex(const MField& x);

// Anti-Hermitian form at g0 with complex representative alpha: h = g0 A_alpha.
MField alpha_to_form(const CField& alpha);

struct PairDefects {
  double j_square = 0.0;   // |J^2 + I|
  double hermitian = 0.0;  // |J^T g J - g| / |g|
  double omega = 0.0;      // |g - omega J| / |g|
  double det = 0.0;        // |det g - 1|
  double max() const;
};
PairDefects pair_defects(const AssocPair& p);
// sup |J^T h J + h| and sup |tr(g^{-1} h)|, divided by sup |h|.
double tangent_defect(const MField& h, const AssocPair& p);
// Sup over the grid of the largest eigenvalue of P^2; must stay below 1.
double cayley_radius2(const MField& P);

AssocPair cayley_to_pair(const MField& P, const AssocPair& base);
MField cayley_from_pair(const MField& J, const AssocPair& base);

// h = 2 g0 (1-P)^{-1} A (1-P)^{-1}
MField tangent_push(const MField& A, const MField& P, const AssocPair& base);
// A = 1/2 (1-P)^{-1} (1-P^2) g^{-1} h (1-P)
MField tangent_pull(const MField& h, const MField& P, const AssocPair& base);

// (hJ)(X, Y) = h(X, JY)
MField acs_on_am(const MField& h, const MField& J);

// Integral of tr(A J B) against omega, A = g^{-1} a.
double fundamental_form(const MField& a, const MField& b, const AssocPair& at);

// Polar construction: A = -gp^{-1} omega (so omega(X,Y) = gp(AX,Y)),
// H = sqrt(-A^2), J = A H^{-1}, g = gp H.
AssocPair project_to_associated(const MField& gp);

// g' = 1/2 (S^T g0' + g0' S) with S = (1+P)(1-P)^{-1}; the inverse uses S^{-1}.
MField fiber_transport(const MField& g0p, const MField& P);
MField fiber_transport_inverse(const MField& gp, const MField& P);

// df/dwbar - conj(p) df/dw in the complex coordinate of J0 (torus x + i y;
// sphere phi + i artanh z). The kernel consists of J-holomorphic functions
// for J the Cayley image of p.
CField beltrami_apply(const CField& f, const CField& p, DiffMethod method = DiffMethod::spectral);

}  // namespace amspace
