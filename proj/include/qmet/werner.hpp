#pragma once

#include <array>
#include <vector>

#include "qmet/fisher.hpp"
#include "qmet/linalg.hpp"

namespace qmet {

/// Two-qubit Werner state restricted to the symmetric triplet sector,
/// basis (|0,2>, |1,1>, |2,0>): diag(A, B, A) with A = (1-alpha)/3,
/// B = (1+2*alpha)/3. Throws AlphaOutOfRange unless 0 <= alpha <= 1.
DensityMatrix werner_density(double alpha);

/// Rotated probe exp(-i theta J_y) rho_w exp(+i theta J_y).
DensityMatrix werner_state(double alpha, double theta);

/// QFI for rotation about unit axis n: 12 alpha^2 (n_x^2 + n_y^2)/(2 + alpha).
/// Independent of theta. Throws BadAxis for non-unit n.
double werner_qfi(double alpha, const std::array<double, 3>& n_axis);

/// Mode occupation probabilities (p_0, p_1, p_2) of the rotated probe:
/// p_0 = p_2 = (1-alpha)/3 + (alpha/2) sin^2(theta),
/// p_1 = (1-alpha)/3 + alpha cos^2(theta).
std::array<double, 3> werner_probabilities(double alpha, double theta);

/// CFI of the occupation (imbalance) measurement,
///   36 alpha^2 sin^2(2 theta) /
///     ([4 - alpha(1 + 3 cos 2theta)] [2 + alpha(1 + 3 cos 2theta)]).
/// Both denominator factors are bounded below by 2(1-alpha); for
/// alpha >= 1 - 1e-12 the removable limit 4 is returned for every theta.
double werner_imbalance_cfi(double alpha, double theta);

/// SLD of the rotated probe, -(6i/(2+alpha)) [J_y, rho_w(theta)].
ComplexMatrix werner_sld(double alpha, double theta);

/// Closed-form SLD eigensystem. eigenvalues = {+6a/(2+a), -6a/(2+a), 0};
/// states[k] is the unit eigenvector for eigenvalues[k], phase-fixed so the
/// largest-magnitude component (first index on ties) is real positive.
/// Throws AlphaZero when alpha < 1e-12 (the SLD vanishes identically).
struct SldEigensystem {
  std::array<double, 3> eigenvalues;
  std::array<std::vector<cplx>, 3> states;
};

SldEigensystem werner_sld_eigensystem(double alpha, double theta);

/// Projectors onto the SLD eigenstates, as a validated POVM.
PovmSet werner_sld_projectors(double alpha, double theta);

/// Projectors onto |0,2>, |1,1>, |2,0>.
PovmSet werner_fock_projectors();

/// Passive two-mode unitary mapping the SLD eigenstates at theta = 0 onto
/// the occupation basis: Psi_1 -> |0,2>, Psi_2 -> |1,1>, Psi_3 -> |2,0>,
/// so occupation counting after it realizes the optimal measurement.
ComplexMatrix disentangling_map();

}  // namespace qmet
