#pragma once

#include <array>
#include <vector>

#include "qmet/linalg.hpp"

namespace qmet {

enum class Axis { X, Y, Z };

/// Collective spin-N/2 operators on the symmetric subspace of N qubits,
/// dimension N+1. Basis |j>, j = 0..N ascending, j = particles in mode a;
/// J_z is diagonal with entries j - N/2 and the ladder couplings are
/// alpha_j = sqrt((j+1)(N-j)):
///   (J_x)_{j,j+1} = (J_x)_{j+1,j} = alpha_j / 2
///   (J_y)_{j+1,j} = alpha_j / (2i) = -(J_y)_{j,j+1}
/// so that [J_x, J_y] = i J_z.
struct CollectiveOperators {
  int n = 0;
  ComplexMatrix jx, jy, jz;
};

/// Throws Error unless n >= 1.
CollectiveOperators build_operators(int n);

const ComplexMatrix& axis_operator(const CollectiveOperators& ops, Axis axis);

/// Pure symmetric state: N+1 coefficients over |j>, unit norm within 1e-10.
struct SymmetricState {
  int n = 0;
  std::vector<cplx> c;
};

/// Validates length (n+1) and normalization; throws DimensionMismatch / Error.
SymmetricState make_state(int n, std::vector<cplx> coeffs);

/// exp(-i theta n_axis.J) |psi>. n_axis must be unit within 1e-10 (BadAxis).
SymmetricState rotate_state(const SymmetricState& psi, const std::array<double, 3>& n_axis,
                            double theta);

/// |j = k>. Throws BadFockIndex unless 0 <= k <= n.
SymmetricState fock_state(int n, int k);

/// (|n,0> + |0,n>)/sqrt(2), i.e. (|j=n> + |j=0>)/sqrt(2).
SymmetricState noon_state(int n);

/// |j = n/2>; throws OddNForTwinFock for odd n.
SymmetricState twin_fock_state(int n);

/// Ground state of H = -2 J_x + u J_z^2 (tunneling strength fixed to 1,
/// u = interaction over tunneling). All components positive after the
/// global phase convention; symmetric under j <-> n-j.
SymmetricState bose_hubbard_ground(int n, double u);

/// Normalizes raw coefficients, then fixes the global phase so the first
/// component with |c_j| > 1e-12 is real positive. Throws ZeroState when the
/// input norm is below 1e-12.
SymmetricState state_from_coeffs(int n, const std::vector<cplx>& coeffs);

}  // namespace qmet
