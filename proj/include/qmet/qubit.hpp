#pragma once

#include <array>
#include <vector>

#include "qmet/linalg.hpp"

namespace qmet {

/// Qubit state as a Bloch vector, |s| <= 1.
struct BlochVector {
  double x = 0.0, y = 0.0, z = 0.0;

  double norm() const;
  bool is_pure(double tol = 1e-10) const;
};

/// One POVM element gamma*(1 + q.sigma); gamma > 0, |q| <= 1.
struct QubitPovmElement {
  double gamma;
  std::array<double, 3> q;
};

/// Full qubit POVM. valid() checks gamma_k > 0, |q_k| <= 1,
/// sum gamma = 1 and sum gamma*q = 0, all within tol.
struct QubitPovm {
  std::vector<QubitPovmElement> elements;
  bool valid(double tol = 1e-10) const;
};

/// Interferometer action on the Bloch sphere: rotation by theta about +y,
/// (x, y, z) -> (x cos + z sin, y, z cos - x sin).
BlochVector rotate_bloch(const BlochVector& s, double theta);

/// Quantum Fisher information for the rotation family, s_x^2 + s_z^2.
/// Invariant under rotate_bloch.
double qubit_qfi(const BlochVector& s);

/// Bloch vector of the symmetric logarithmic derivative, L = s_perp . sigma
/// with s_perp = (s_z, 0, -s_x). Exact for pure and mixed states alike.
std::array<double, 3> qubit_sld(const BlochVector& s);

/// Outcome probability gamma*(1 + q.s).
double povm_probability(const BlochVector& s, const QubitPovmElement& e);

/// Classical Fisher information of the POVM at the rotated state s(theta).
/// Outcomes with p < 1e-14 are dropped when |dp| < 1e-12 and otherwise raise
/// ZeroProbabilityWithNonzeroDerivative. Throws InvalidPovm if !povm.valid().
double qubit_cfi(const BlochVector& s, double theta, const QubitPovm& povm);

/// Directions q (unit vectors) whose projective pair saturates the quantum
/// bound. Pure in-plane states admit the whole circle spanned by e_s and
/// e_perp; mixed in-plane states exactly the pair +-e_perp.
struct OptimalQFamily {
  bool pure;
  std::array<double, 3> e_s;     // s/|s|
  std::array<double, 3> e_perp;  // s_perp/|s_perp|

  /// Circle member cos(phi) e_s + sin(phi) e_perp (meaningful when pure).
  std::array<double, 3> q_circle(double phi) const;
};

/// Throws OutOfPlane when |s_y| > 1e-10, ZeroState when |s| < 1e-12.
OptimalQFamily optimal_q_solutions(const BlochVector& s);

/// CFI of the +-z projective measurement, s_x^2 / (1 - s_z^2).
/// Throws PoleAtUnitSz when |s_z| >= 1 - 1e-12.
double imbalance_cfi_qubit(const BlochVector& s);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// v . sigma.
ComplexMatrix bloch_operator(const std::array<double, 3>& v);

/// Density matrix (1 + s.sigma)/2.
ComplexMatrix bloch_density(const BlochVector& s);

/// Matrix form gamma*(1 + q.sigma) of a POVM element.
ComplexMatrix povm_element_matrix(const QubitPovmElement& e);

}  // namespace qmet
