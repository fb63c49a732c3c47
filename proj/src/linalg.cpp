#include "qmet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qmet {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix dimensions differ");
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) {
  for (auto& x : a_) x *= scale;
  return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : a_) s += std::norm(x);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : a_) m = std::max(m, std::abs(x));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
  ComplexMatrix p = adjoint() * (*this);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      cplx want = (i == j) ? 1.0 : 0.0;
      if (std::abs(p(i, j) - want) > tol) return false;
    }
  return true;
}

std::vector<cplx> ComplexMatrix::apply(const std::vector<cplx>& v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw DimensionMismatch("vector length does not match matrix dimension");
  std::vector<cplx> w(dim_, 0.0);
  for (int i = 0; i < dim_; ++i) {
    cplx s = 0.0;
    for (int j = 0; j < dim_; ++j) s += (*this)(i, j) * v[j];
    w[i] = s;
  }
  return w;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs);
  const int n = lhs.dim();
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const cplx aik = lhs(i, k);
      if (aik == cplx(0.0)) continue;
      for (int j = 0; j < n; ++j) m(i, j) += aik * rhs(k, j);
    }
  return m;
}

ComplexMatrix operator*(cplx scale, ComplexMatrix m) {
  m *= scale;
  return m;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  return a * b - b * a;
}

double frobenius_inner_re(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      s += (std::conj(a(i, j)) * b(i, j)).real();
  return s;
}

ComplexMatrix outer(const std::vector<cplx>& v, const std::vector<cplx>& w) {
  if (v.size() != w.size()) throw DimensionMismatch("outer product length mismatch");
  const int n = static_cast<int>(v.size());
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = v[i] * std::conj(w[j]);
  return m;
}

cplx vdot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("inner product length mismatch");
  cplx s = 0.0;
  for (size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

double vec_norm(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

namespace {

double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One cyclic sweep of complex Jacobi rotations over all upper-triangle pivots.
// For pivot (p, q) the rotation J has J_pp = c, J_pq = s, J_qp = -s*conj(ph),
// J_qq = c*conj(ph) with ph = a_pq/|a_pq|; A <- J^dagger A J keeps A Hermitian
// and zeroes the pivot, V <- V J accumulates eigenvectors.
void jacobi_sweep(ComplexMatrix& a, ComplexMatrix& v) {
  const int n = a.dim();
  for (int p = 0; p < n - 1; ++p)
    for (int q = p + 1; q < n; ++q) {
      const cplx apq = a(p, q);
      const double mag = std::abs(apq);
      if (mag == 0.0) continue;
      const cplx ph = apq / mag;
      const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
      const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;

      for (int i = 0; i < n; ++i) {  // columns of A and V
        const cplx aip = a(i, p), aiq = a(i, q);
        a(i, p) = c * aip - s * std::conj(ph) * aiq;
        a(i, q) = s * aip + c * std::conj(ph) * aiq;
        const cplx vip = v(i, p), viq = v(i, q);
        v(i, p) = c * vip - s * std::conj(ph) * viq;
        v(i, q) = s * vip + c * std::conj(ph) * viq;
      }
      for (int j = 0; j < n; ++j) {  // rows of A
        const cplx apj = a(p, j), aqj = a(q, j);
        a(p, j) = c * apj - s * ph * aqj;
        a(q, j) = s * apj + c * ph * aqj;
      }
      a(p, q) = 0.0;
      a(q, p) = 0.0;
      a(p, p) = a(p, p).real();
      a(q, q) = a(q, q).real();
    }
}

}  // namespace

HermitianEigen hermitian_eig(const ComplexMatrix& input, double hermiticity_tol) {
  const int n = input.dim();
  if (n <= 0) throw DimensionMismatch("empty matrix");
  if (!input.is_hermitian(hermiticity_tol)) throw NotHermitian("matrix is not Hermitian");

  // Work on the exactly Hermitian part so roundoff in the input cannot leak
  // into complex diagonal entries.
  ComplexMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = 1e-14 * a.frobenius_norm();

  constexpr int kMaxSweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    if (offdiag_norm(a) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;
    jacobi_sweep(a, v);
  }
  if (!converged) throw ConvergenceError("Jacobi iteration did not converge in 100 sweeps");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

bool is_psd(const ComplexMatrix& a, double tol) {
  if (!a.is_hermitian(tol)) return false;
  const auto eig = hermitian_eig(a, tol);
  return eig.eigenvalues.front() >= -tol;
}

ComplexMatrix evolve_unitary(const ComplexMatrix& h, double theta, double hermiticity_tol) {
  const auto eig = hermitian_eig(h, hermiticity_tol);
  const int n = h.dim();
  ComplexMatrix u(n);
  // U = V diag(exp(-i theta lambda)) V^dagger
  for (int k = 0; k < n; ++k) {
    const cplx ph = std::exp(cplx(0.0, -theta * eig.eigenvalues[k]));
    for (int i = 0; i < n; ++i) {
      const cplx vik = ph * eig.eigenvectors(i, k);
      for (int j = 0; j < n; ++j)
        u(i, j) += vik * std::conj(eig.eigenvectors(j, k));
    }
  }
  return u;
}

}  // namespace qmet
