#pragma once

#include <complex>
#include <vector>

#include "qmet/errors.hpp"

namespace qmet {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}

  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }

  cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
  const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx scale);

  ComplexMatrix adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  bool is_hermitian(double tol = 1e-10) const;
  bool is_unitary(double tol = 1e-10) const;

  std::vector<cplx> apply(const std::vector<cplx>& v) const;

 private:
  int dim_ = 0;
  std::vector<cplx> a_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cplx scale, ComplexMatrix m);

/// A*B - B*A. Throws DimensionMismatch.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Re Tr(A^dagger B).
double frobenius_inner_re(const ComplexMatrix& a, const ComplexMatrix& b);

/// |v><w|.
ComplexMatrix outer(const std::vector<cplx>& v, const std::vector<cplx>& w);

cplx vdot(const std::vector<cplx>& a, const std::vector<cplx>& b);
double vec_norm(const std::vector<cplx>& v);

struct HermitianEigen {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k belongs to eigenvalues[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.
/// Input must be Hermitian within hermiticity_tol (max entry deviation) or
/// NotHermitian is thrown; the strictly Hermitian part (A + A^dagger)/2 is
/// what gets diagonalized. Convergence: off-diagonal Frobenius norm below
/// 1e-14 * ||A||_F, hard cap 100 sweeps, then ConvergenceError.
HermitianEigen hermitian_eig(const ComplexMatrix& a, double hermiticity_tol = 1e-10);

/// True iff a is Hermitian within tol and its eigenvalues are all >= -tol.
bool is_psd(const ComplexMatrix& a, double tol = 1e-10);

/// exp(-i theta H) for Hermitian H, via the eigendecomposition.
ComplexMatrix evolve_unitary(const ComplexMatrix& h, double theta,
                             double hermiticity_tol = 1e-10);

}  // namespace qmet
