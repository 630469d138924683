#pragma once

#include "amspace/assoc.hpp"

// Weak Riemannian geometry of the space of associated metrics. Intrinsic
// functions take forms h at an AssocPair; chart functions take J0-anticommuting
// operators A at a Cayley operator P. Integrals are against omega.
namespace amspace {

// Integral of tr(A B), A = g^{-1} a.
double am_inner(const MField& a, const MField& b, const AssocPair& at);

// -1/4 g [[A, B], C]
MField am_curvature(const MField& a, const MField& b, const MField& c, const AssocPair& at);

// (R(a,b)b, a) / Gram(a, b), the numerator as 1/4 of the integral of tr([A,B]^2).
double am_sectional(const MField& a, const MField& b, const AssocPair& at);
double am_holomorphic_sectional(const MField& a, const AssocPair& at);

// g e^{tA}, J e^{tA} pointwise.
AssocPair am_geodesic(const AssocPair& at, const MField& a, double t);

// Chart presentation at P over the base pair (g0, J0).
double chart_inner(const MField& A, const MField& B, const MField& P);
MField chart_curvature(const MField& A, const MField& B, const MField& C, const MField& P);
double chart_sectional(const MField& A, const MField& B, const MField& P);
double chart_fundamental_form(const MField& A, const MField& B, const MField& P, const AssocPair& base);
// tanh(tA): the chart image of the geodesic from P = 0 with velocity A.
MField chart_geodesic(const MField& A, double t);

// Complex-frame oracle at g0: with a, b given by complex functions alpha,
// beta, tr(A B) = 2 Re(alpha conj(beta)) and tr([A,B]^2) = -8 Im(alpha conj(beta))^2.
double complex_inner(const CField& alpha, const CField& beta);
double complex_sectional(const CField& alpha, const CField& beta);

}  // namespace amspace
