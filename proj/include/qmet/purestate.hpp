#pragma once

#include <vector>

#include "qmet/spinrep.hpp"

namespace qmet {

/// Mode-local phase derivatives eta_j = <j|J_k|psi> / C_j. Entries with
/// |C_j| <= 1e-12 are masked (defined[j] = false, value 0); for axis z the
/// ratio is the diagonal element j - N/2 and every entry is defined.
struct EtaCoefficients {
  Axis axis;
  std::vector<cplx> values;
  std::vector<bool> defined;
};

EtaCoefficients eta(const SymmetricState& psi, Axis axis);

/// Split of the pure-state QFI 4 Var(J_k) into the part carried by the
/// occupation distribution and the part carried by relative phases:
///   prob_term  = sum_j 4 (Im[w_j conj(C_j)])^2 / |C_j|^2   (defined j)
///              + sum_j 4 |w_j|^2                           (masked j)
///   phase_term = 4 [ sum_j p_j (Re eta_j)^2 - (sum_j p_j Re eta_j)^2 ]
/// with w = J_k psi, p_j = |C_j|^2. Masked entries use the theta -> 0 limit
/// of (dp_j)^2 / p_j, which keeps prob_term + phase_term = qfi exact; the
/// identity is checked to 1e-8 and BreakdownMismatch thrown on failure.
struct QfiBreakdown {
  double prob_term = 0.0;
  double phase_term = 0.0;
  double qfi = 0.0;  // 4 Var(J_k)
};

QfiBreakdown qfi_breakdown(const SymmetricState& psi, Axis axis);

/// CFI of ideal occupation counting for the family exp(-i theta J_k)|psi>
/// at theta = 0. Equals the prob_term of the breakdown.
double cfi_mode_counting(const SymmetricState& psi, Axis axis);

/// Counting saturates the quantum bound iff the phase term vanishes.
struct CountingOptimality {
  bool optimal = false;
  double deficit = 0.0;  // phase_term; optimal iff < 1e-10
};

CountingOptimality counting_is_optimal(const SymmetricState& psi, Axis axis);

/// CFI of far-field (momentum) detection after free expansion, for a probe
/// with real, j <-> N-j symmetric coefficients (within 1e-10, else
/// PreconditionViolated): equals 4 Var(J_z) of the phase-imprinted state
/// e^{-i theta J_z}|psi>, independent of theta.
double farfield_cfi(const SymmetricState& psi, double theta);

}  // namespace qmet
