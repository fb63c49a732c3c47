#pragma once

#include <vector>

#include "qmet/linalg.hpp"

namespace qmet {

/// Validated density matrix: Hermitian, unit trace, eigenvalues >= -tol.
/// Construction throws NotDensityMatrix otherwise.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& m, double tol = 1e-10);

  const ComplexMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }

 private:
  ComplexMatrix m_;
};

/// Validated POVM: every element Hermitian and PSD, elements summing to the
/// identity within tol. Construction throws InvalidPovm otherwise.
class PovmSet {
 public:
  explicit PovmSet(std::vector<ComplexMatrix> elements, double tol = 1e-10);

  const std::vector<ComplexMatrix>& elements() const { return e_; }
  size_t size() const { return e_.size(); }

 private:
  std::vector<ComplexMatrix> e_;
};

/// -i [h, rho], the state derivative for the rotation family exp(-i theta h).
ComplexMatrix generator_derivative(const DensityMatrix& rho, const ComplexMatrix& h);

/// Quantum Fisher information of rho under the generator h (Hermitian within
/// 1e-10, else NotHermitianGenerator):
///   F_Q = 2 sum_{jk} (p_j - p_k)^2 / (p_j + p_k) |<j|h|k>|^2
/// over eigenpairs with p_j + p_k > 1e-12.
double qfi_mixed(const DensityMatrix& rho, const ComplexMatrix& h);

/// Symmetric logarithmic derivative solving (rho L + L rho)/2 = drho.
/// In the eigenbasis L_jk = 2 drho_jk / (p_j + p_k); blocks with
/// p_j + p_k <= 1e-12 are set to zero, and SupportMismatch is thrown if
/// |drho_jk| > 1e-8 there. drho must be Hermitian within 1e-10.
ComplexMatrix sld(const DensityMatrix& rho, const ComplexMatrix& drho);

/// Classical Fisher information sum_i (d p_i)^2 / p_i with p_i = Tr(rho E_i),
/// d p_i = Tr(drho E_i). Outcomes with p < 1e-14 are dropped when
/// |dp| < 1e-12 and otherwise raise ZeroProbabilityWithNonzeroDerivative.
double cfi_povm(const DensityMatrix& rho, const ComplexMatrix& drho, const PovmSet& povm);

/// Saturation test for one POVM element: E rho = lambda E L rho with lambda
/// real. lambda is the real least-squares coefficient and residual the
/// relative misfit ||E rho - lambda E L rho|| / max(||E rho||, eps). When
/// ||E L rho|| < eps (element blind to the SLD), lambda = 0 and the residual
/// becomes |Tr(E drho)| / max(||E rho||, eps) with drho = (rho L + L rho)/2,
/// the stationarity defect of the outcome probability.
struct OptimalityCheck {
  double lambda = 0.0;
  double residual = 0.0;
  bool optimal = false;  // residual < 1e-8
};

OptimalityCheck check_optimal(const ComplexMatrix& e, const DensityMatrix& rho,
                              const ComplexMatrix& l);

}  // namespace qmet
