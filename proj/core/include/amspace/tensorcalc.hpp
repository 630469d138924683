#pragma once

#include "amspace/assoc.hpp"

// Classical tensor calculus for metric fields on a 2D chart. Index 0 is
// axis1 (phi or x), index 1 is axis2 (z or y). Vector fields carry upper
// indices, forms lower ones.
namespace amspace {

struct Gamma2 {
  double v[2][2][2] = {};  // v[k][i][j] = Gamma^k_ij
  double& operator()(int k, int i, int j) { return v[k][i][j]; }
  double operator()(int k, int i, int j) const { return v[k][i][j]; }
  static Gamma2 Zero() { return Gamma2{}; }
  Gamma2& operator+=(const Gamma2& o);
  Gamma2& operator-=(const Gamma2& o);
  Gamma2& operator*=(double s);
  double max_abs() const;
};
using GammaField = Field<Gamma2>;

// Derivative method per axis. The default is spectral on periodic axes and
// the 13-point stencil on the sphere z axis, where metric coefficients such
// as 1/(1 - z^2) are not periodic.
struct DiffRule {
  DiffMethod axis1 = DiffMethod::spectral;
  DiffMethod axis2 = DiffMethod::spectral;
  static DiffRule for_grid(const Grid& g);
  DiffMethod on(int axis) const { return axis == 1 ? axis1 : axis2; }
};

GammaField christoffels(const MField& g, const DiffRule& rule);
GammaField christoffels(const MField& g);

RField gaussian_curvature(const MField& g, const DiffRule& rule);
RField gaussian_curvature(const MField& g);
// r = 2K
RField scalar_curvature(const MField& g, const DiffRule& rule);
RField scalar_curvature(const MField& g);
MField ricci(const MField& g, const DiffRule& rule);
MField ricci(const MField& g);
// 1/2 (Ric - J^T Ric J)
MField aric(const AssocPair& p, const DiffRule& rule);
MField aric(const AssocPair& p);

// L_X g = nabla_i X_j + nabla_j X_i
MField lie_metric(const VField& X, const MField& g, const DiffRule& rule);
MField lie_metric(const VField& X, const MField& g);
// (delta h)^i = -nabla_j h^{ij}
VField divergence_form(const MField& h, const MField& g, const DiffRule& rule);
VField divergence_form(const MField& h, const MField& g);
// div X = (det g)^{-1/2} d_i((det g)^{1/2} X^i)
RField vector_divergence(const VField& X, const MField& g, const DiffRule& rule);
RField vector_divergence(const VField& X, const MField& g);
// grad F = g^{-1} dF
VField gradient(const RField& F, const MField& g, const DiffRule& rule);
VField gradient(const RField& F, const MField& g);
// nabla^i nabla^j h_ij = -div(delta h)
RField double_divergence(const MField& h, const MField& g, const DiffRule& rule);
RField double_divergence(const MField& h, const MField& g);
// (box a)^k_ij = 1/2 g^{kl} (nabla_i a_jl + nabla_j a_il - nabla_l a_ij)
GammaField box_operator(const MField& a, const MField& g, const DiffRule& rule);
GammaField box_operator(const MField& a, const MField& g);

// Pointwise (X, Y)_g for vectors and <a, b>_g = tr(g^{-1} a g^{-1} b) for forms.
RField vector_dot(const VField& X, const VField& Y, const MField& g);
RField form_dot(const MField& a, const MField& b, const MField& g);
RField sqrt_det(const MField& g);

// R(g) = integral of r sqrt(det g) over the chart (coordinate measure).
double total_scalar(const MField& g, const DiffRule& rule);
double total_scalar(const MField& g);
// <1/2 r g - Ric, h>_g integrated against sqrt(det g).
double gradient_pairing(const MField& g, const MField& h, const DiffRule& rule);
double gradient_pairing(const MField& g, const MField& h);

}  // namespace amspace
