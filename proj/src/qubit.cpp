#include "qmet/qubit.hpp"

#include <cmath>

namespace qmet {

namespace {

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm3(const std::array<double, 3>& a) { return std::sqrt(dot3(a, a)); }

}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

bool BlochVector::is_pure(double tol) const { return std::abs(norm() - 1.0) <= tol; }

bool QubitPovm::valid(double tol) const {
  if (elements.empty()) return false;
  double gsum = 0.0;
  std::array<double, 3> qsum = {0.0, 0.0, 0.0};
  for (const auto& e : elements) {
    if (e.gamma <= 0.0) return false;
    if (norm3(e.q) > 1.0 + tol) return false;
    gsum += e.gamma;
    for (int k = 0; k < 3; ++k) qsum[k] += e.gamma * e.q[k];
  }
  return std::abs(gsum - 1.0) <= tol && norm3(qsum) <= tol;
}

BlochVector rotate_bloch(const BlochVector& s, double theta) {
  const double c = std::cos(theta), n = std::sin(theta);
  return {s.x * c + s.z * n, s.y, s.z * c - s.x * n};
}

double qubit_qfi(const BlochVector& s) { return s.x * s.x + s.z * s.z; }

std::array<double, 3> qubit_sld(const BlochVector& s) { return {s.z, 0.0, -s.x}; }

double povm_probability(const BlochVector& s, const QubitPovmElement& e) {
  return e.gamma * (1.0 + e.q[0] * s.x + e.q[1] * s.y + e.q[2] * s.z);
}

double qubit_cfi(const BlochVector& s, double theta, const QubitPovm& povm) {
  if (!povm.valid()) throw InvalidPovm("POVM weights or completeness violated");
  const BlochVector st = rotate_bloch(s, theta);
  const std::array<double, 3> ds = {st.z, 0.0, -st.x};  // d s(theta)/d theta
  double f = 0.0;
  for (const auto& e : povm.elements) {
    const double p = povm_probability(st, e);
    const double dp = e.gamma * dot3(e.q, ds);
    if (p < 1e-14) {
      if (std::abs(dp) > 1e-12)
        throw ZeroProbabilityWithNonzeroDerivative("vanishing outcome with dp != 0");
      continue;
    }
    f += dp * dp / p;
  }
  return f;
}

std::array<double, 3> OptimalQFamily::q_circle(double phi) const {
  const double c = std::cos(phi), n = std::sin(phi);
  return {c * e_s[0] + n * e_perp[0], c * e_s[1] + n * e_perp[1], c * e_s[2] + n * e_perp[2]};
}

OptimalQFamily optimal_q_solutions(const BlochVector& s) {
  if (std::abs(s.y) > 1e-10) throw OutOfPlane("state has a y component");
  const double r = s.norm();
  if (r < 1e-12) throw ZeroState("Bloch vector is zero");
  OptimalQFamily fam;
  fam.pure = s.is_pure();
  fam.e_s = {s.x / r, s.y / r, s.z / r};
  const std::array<double, 3> perp = qubit_sld(s);
  const double pr = norm3(perp);
  fam.e_perp = {perp[0] / pr, perp[1] / pr, perp[2] / pr};
  return fam;
}

double imbalance_cfi_qubit(const BlochVector& s) {
  const double den = 1.0 - s.z * s.z;
  if (std::abs(s.z) >= 1.0 - 1e-12)
    throw PoleAtUnitSz("imbalance CFI undefined at |s_z| = 1");
  return s.x * s.x / den;
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2);
  m(0, 1) = cplx(0.0, -1.0);
  m(1, 0) = cplx(0.0, 1.0);
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

ComplexMatrix bloch_operator(const std::array<double, 3>& v) {
  ComplexMatrix m(2);
  m(0, 0) = v[2];
  m(1, 1) = -v[2];
  m(0, 1) = cplx(v[0], -v[1]);
  m(1, 0) = cplx(v[0], v[1]);
  return m;
}

ComplexMatrix bloch_density(const BlochVector& s) {
  ComplexMatrix m = bloch_operator({s.x, s.y, s.z});
  m(0, 0) += 1.0;
  m(1, 1) += 1.0;
  return 0.5 * m;
}

ComplexMatrix povm_element_matrix(const QubitPovmElement& e) {
  ComplexMatrix m = bloch_operator(e.q);
  m(0, 0) += 1.0;
  m(1, 1) += 1.0;
  return cplx(e.gamma) * m;
}

}  // namespace qmet
