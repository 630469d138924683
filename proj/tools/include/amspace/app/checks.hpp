#pragma once

#include <cstdint>
#include <vector>

#include "amspace/app/report.hpp"

// Each function returns the rows of one verification family. Tables and the
// verify groups are concatenations of these; the acceptance binary reads
// them one family per criterion.
namespace amspace::app {

// Sectional and holomorphic sectional curvature of the sphere cases.
std::vector<Row> sphere_curvature_rows(int n);
// K(h, Jh) over random (p, alpha) with sup |p| <= 0.8, against -1/(8 pi).
std::vector<Row> holomorphic_bound_rows(std::uint64_t seed, int n, int samples = 100);
std::vector<Row> torus_curvature_rows(int n);
// Quotient curvature families at the flat torus, k, l, p, q in {1, 2, 3}.
std::vector<Row> quotient_rows(int n);
// Brace antisymmetry, O'Neill inequality, the correction identity and scale
// invariance on random horizontal pairs.
std::vector<Row> quotient_property_rows(std::uint64_t seed, int n);
// Gaussian curvature of g(t p_kl), round sphere band, Gauss-Bonnet.
std::vector<Row> gaussian_curvature_rows(std::uint64_t seed, int n);
// Closed-form geodesics against their connection, volume factor.
std::vector<Row> geodesic_rows(std::uint64_t seed);
// g e^{tA} on the space of associated metrics, pointwise.
std::vector<Row> am_geodesic_rows(std::uint64_t seed, int n);
// Closed-form R(a,b)c against nested differences, 50 instances per structure.
std::vector<Row> connection_curvature_rows(std::uint64_t seed, int instances = 50);
// Cayley roundtrips, exponential chart, change of base, tanh bridge.
std::vector<Row> cayley_rows(std::uint64_t seed, int n, int samples = 100);
// Fundamental form: antisymmetry, positivity, closedness at P = 0.
std::vector<Row> fundamental_form_rows(std::uint64_t seed, int n);
std::vector<Row> projection_rows(std::uint64_t seed, int n);
std::vector<Row> decomp_rows(std::uint64_t seed, int n);
std::vector<Row> gradient_rows(std::uint64_t seed, int n);
// Pointwise structures at g = I: sectional curvature examples and orders.
std::vector<Row> point_structure_rows(std::uint64_t seed);

}  // namespace amspace::app
