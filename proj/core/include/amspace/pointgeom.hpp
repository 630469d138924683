#pragma once

#include <optional>
#include <string>

#include "amspace/matalg.hpp"

// Geometry of the finite-dimensional manifold of inner products at one
// point. Tangent vectors are symmetric matrices a; A = g^{-1} a.
namespace amspace {

enum class StructureKind { flat, conformally_flat, homogeneous, dewitt, non_riemannian, canonical };

std::string to_string(StructureKind k);

struct WeakStructure {
  StructureKind kind = StructureKind::canonical;
  double alpha = 0.0;
  // g0 for flat / conformally-flat / homogeneous, and the density reference
  // for the structures weighted by sqrt(det g). Identity when absent.
  std::optional<SpdMatrix> reference;

  static WeakStructure flat(double alpha = 0.0) { return {StructureKind::flat, alpha, std::nullopt}; }
  static WeakStructure conformal() { return {StructureKind::conformally_flat, 0.0, std::nullopt}; }
  static WeakStructure homogeneous(double alpha = 0.0) { return {StructureKind::homogeneous, alpha, std::nullopt}; }
  static WeakStructure dewitt(double alpha) { return {StructureKind::dewitt, alpha, std::nullopt}; }
  static WeakStructure non_riemannian() { return {StructureKind::non_riemannian, 0.0, std::nullopt}; }
  static WeakStructure canonical() { return {StructureKind::canonical, 0.0, std::nullopt}; }
};

// Throws DomainError when alpha = -1/n for the structures that need it.
void validate(const WeakStructure& s, int n);

// nabla_a b where db_a is the derivative of the field b along a.
Mat covariant_derivative(const WeakStructure& s, const SpdMatrix& g, const Mat& a, const Mat& b,
                         const Mat& db_a);

// R(a,b)c for constant a, b, c.
Mat curvature_tensor(const WeakStructure& s, const SpdMatrix& g, const Mat& a, const Mat& b, const Mat& c);

// Pointwise integrand of the structure's inner product.
double inner_product_point(const WeakStructure& s, const SpdMatrix& g, const Mat& a, const Mat& b);

// (R(a,b)b, a) / (|a|^2 |b|^2 - (a,b)^2).
double sectional_curvature_point(const WeakStructure& s, const SpdMatrix& g, const Mat& a, const Mat& b);

SpdMatrix geodesic_point(const WeakStructure& s, const SpdMatrix& g0, const Mat& a0, double t);

// sqrt(det g_t / det g0) along the canonical geodesic: q(t)^2 + r^2 t^2.
double canonical_volume_factor(const SpdMatrix& g0, const Mat& a0, double t);

// |nabla_{g'} g'| at t by central differences; dt <= 0 picks 1e-3/(1+|a0|).
double fd_geodesic_residual(const WeakStructure& s, const SpdMatrix& g0, const Mat& a0, double t,
                            double dt = 0.0);

// nabla_a nabla_b c - nabla_b nabla_a c, with the outer derivative taken by
// central differences of step h.
Mat fd_curvature(const WeakStructure& s, const SpdMatrix& g, const Mat& a, const Mat& b, const Mat& c,
                 double h);

struct ConvergenceReport {
  double err_h = 0.0;
  double err_h2 = 0.0;
  double order = 0.0;
  bool exact = false;  // error at roundoff level for both steps
  bool passes(double min_order) const { return exact || order >= min_order; }
};

// Closed-form curvature against fd_curvature at steps h and h/2.
ConvergenceReport fd_curvature_check(const WeakStructure& s, const SpdMatrix& g, const Mat& a, const Mat& b,
                                     const Mat& c, double h);

// Geodesic residual at dt and dt/2; dt <= 0 picks 0.05/(1+|a0|), large
// enough that truncation dominates cancellation.
ConvergenceReport fd_geodesic_check(const WeakStructure& s, const SpdMatrix& g0, const Mat& a0, double t,
                                    double dt = 0.0);

// Q(a,b) = tr A tr B sqrt(det g / det ref), the form preserved by the
// non-Riemannian connection.
double q_form(const SpdMatrix& g, const Mat& a, const Mat& b);

// |d_x Q(b,c) - Q(nabla_x b, c) - Q(b, nabla_x c)| with d_x by central differences.
double q_leibniz_residual(const SpdMatrix& g, const Mat& x, const Mat& b, const Mat& c, double h);

}  // namespace amspace
