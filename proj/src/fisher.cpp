#include "qmet/fisher.hpp"

#include <cmath>

namespace qmet {

DensityMatrix::DensityMatrix(const ComplexMatrix& m, double tol) : m_(m) {
  if (!m_.is_hermitian(tol)) throw NotDensityMatrix("density matrix not Hermitian");
  if (std::abs(m_.trace() - cplx(1.0)) > tol) throw NotDensityMatrix("trace is not 1");
  const auto eig = hermitian_eig(m_, tol);
  if (eig.eigenvalues.front() < -tol) throw NotDensityMatrix("negative eigenvalue");
}

PovmSet::PovmSet(std::vector<ComplexMatrix> elements, double tol) : e_(std::move(elements)) {
  if (e_.empty()) throw InvalidPovm("no elements");
  const int d = e_[0].dim();
  ComplexMatrix sum(d);
  for (const auto& e : e_) {
    if (e.dim() != d) throw InvalidPovm("elements have mixed dimensions");
    if (!is_psd(e, tol)) throw InvalidPovm("element not positive semidefinite");
    sum += e;
  }
  sum -= ComplexMatrix::identity(d);
  if (sum.max_abs() > tol) throw InvalidPovm("elements do not sum to identity");
}

ComplexMatrix generator_derivative(const DensityMatrix& rho, const ComplexMatrix& h) {
  return cplx(0.0, -1.0) * commutator(h, rho.matrix());
}

double qfi_mixed(const DensityMatrix& rho, const ComplexMatrix& h) {
  if (h.dim() != rho.dim()) throw DimensionMismatch("generator dimension mismatch");
  if (!h.is_hermitian(1e-10)) throw NotHermitianGenerator("generator not Hermitian");
  const auto eig = hermitian_eig(rho.matrix());
  const int d = rho.dim();
  const auto& v = eig.eigenvectors;
  const ComplexMatrix hv = v.adjoint() * h * v;  // h in the eigenbasis of rho

  double f = 0.0;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const double pj = eig.eigenvalues[j], pk = eig.eigenvalues[k];
      if (pj + pk <= 1e-12) continue;
      const double diff = pj - pk;
      f += 2.0 * diff * diff / (pj + pk) * std::norm(hv(j, k));
    }
  return f;
}

ComplexMatrix sld(const DensityMatrix& rho, const ComplexMatrix& drho) {
  if (drho.dim() != rho.dim()) throw DimensionMismatch("derivative dimension mismatch");
  if (!drho.is_hermitian(1e-10)) throw NotHermitian("state derivative not Hermitian");
  const auto eig = hermitian_eig(rho.matrix());
  const int d = rho.dim();
  const auto& v = eig.eigenvectors;
  const ComplexMatrix dv = v.adjoint() * drho * v;

  ComplexMatrix lv(d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const double w = eig.eigenvalues[j] + eig.eigenvalues[k];
      if (w <= 1e-12) {
        if (std::abs(dv(j, k)) > 1e-8)
          throw SupportMismatch("derivative acts outside the state's support");
        continue;
      }
      lv(j, k) = 2.0 * dv(j, k) / w;
    }

  return v * lv * v.adjoint();
}

double cfi_povm(const DensityMatrix& rho, const ComplexMatrix& drho, const PovmSet& povm) {
  if (drho.dim() != rho.dim()) throw DimensionMismatch("derivative dimension mismatch");
  double f = 0.0;
  for (const auto& e : povm.elements()) {
    const double p = (e * rho.matrix()).trace().real();
    const double dp = (e * drho).trace().real();
    if (p < 1e-14) {
      if (std::abs(dp) > 1e-12)
        throw ZeroProbabilityWithNonzeroDerivative("vanishing outcome with dp != 0");
      continue;
    }
    f += dp * dp / p;
  }
  return f;
}

OptimalityCheck check_optimal(const ComplexMatrix& e, const DensityMatrix& rho,
                              const ComplexMatrix& l) {
  constexpr double eps = 1e-12;
  const ComplexMatrix a = e * rho.matrix();
  const ComplexMatrix b = e * l * rho.matrix();
  const double na = a.frobenius_norm();
  const double nb = b.frobenius_norm();

  OptimalityCheck out;
  if (nb < eps) {
    // E is blind to the SLD direction; the element saturates its share of
    // the bound iff its outcome probability is stationary.
    const ComplexMatrix drho = 0.5 * (rho.matrix() * l + l * rho.matrix());
    out.lambda = 0.0;
    out.residual = std::abs((e * drho).trace()) / std::max(na, eps);
  } else {
    out.lambda = frobenius_inner_re(b, a) / (nb * nb);
    out.residual = (a - cplx(out.lambda) * b).frobenius_norm() / std::max(na, eps);
  }
  out.optimal = out.residual < 1e-8;
  return out;
}

}  // namespace qmet
