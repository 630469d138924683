#pragma once

#include "amspace/decomp.hpp"

// Curvature of the quotient by exact symplectomorphisms at the flat torus.
namespace amspace {

// {a,b}^k = (delta b, a)^k + (box b, a)^k - (delta a, b)^k - (box a, b)^k with
// (delta b, a)^k = a^k_i (delta b)^i and (box b, a)^k = (box b)^k_ij a^ij.
VField brace(const MField& a, const MField& b);

// [a,b]^V = -alpha J grad E^{-1} div J {a,b}
MField vertical_bracket(const MField& a, const MField& b);

struct QuotientCurvature {
  double horizontal = 0.0;   // K(a, b) in the space of associated metrics
  double correction = 0.0;   // 3/4 int f E^{-1} f / |a ^ b|^2, f = div J {a,b}
  double total() const { return horizontal + correction; }
};

QuotientCurvature quotient_curvature(const MField& a, const MField& b);
double quotient_sectional(const MField& a, const MField& b);

// Throws ContractError unless h is horizontal at the flat torus.
void require_horizontal(const MField& h, const char* what);

}  // namespace amspace
