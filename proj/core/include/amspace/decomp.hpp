#pragma once

#include <optional>
#include <string>

#include "amspace/tensorcalc.hpp"

// Orthogonal splittings at the flat torus metric g0 = I, J0 = [[0,-1],[1,0]].
// alpha_g X = 1/2 L_X g, delta as in tensorcalc, E = div J delta alpha J grad.
namespace amspace {

// 1/2 L_X g
MField alpha_op(const VField& X, const MField& g);
// J grad F
VField hamiltonian_field(const RField& F, const AssocPair& at);

// E f = 1/2 Laplacian^2 f, spectrally.
RField e_apply(const RField& f);
// Inverse on zero-mean fields; KernelError when the mean is not zero.
RField e_inverse(const RField& f);
// E f composed from the tensorcalc primitives.
RField e_factorized(const RField& f);

// div J delta h at the base pair of h's grid.
RField div_j_delta(const MField& h);
// -div J delta_g h; zero exactly on horizontal forms. On the flat torus this
// is v_xx - v_yy + 2 u_xy for h = [[u, -v], [-v, -u]]. On the sphere chart
// the caller restricts attention to |z| <= 0.9.
RField horizontal_residual(const MField& h);

// h^V = alpha J grad E^{-1} div J delta h
MField vertical_project(const MField& h);

enum class SplitKind {
  berger_ebin,  // h = h0 + alpha X, delta h0 = 0
  hamiltonian,  // h = h* + alpha X_F, div J delta h* = 0
};

struct SplitResult {
  SplitKind kind = SplitKind::berger_ebin;
  MField h0;
  MField lie_part;
  VField X;
  std::optional<RField> F;
  // Constant Fourier modes (kernel of the normal operator) stay in h0.
  std::string convention = "constant-modes-in-h0";
};

SplitResult berger_ebin_split(const MField& h, SplitKind kind = SplitKind::berger_ebin);

// Integral of tr(a b) at g0 = I (the L2 pairing of forms).
double flat_pairing(const MField& a, const MField& b);

}  // namespace amspace
