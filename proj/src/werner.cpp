#include "qmet/werner.hpp"

#include <cmath>
#include <numbers>

#include "qmet/spinrep.hpp"

namespace qmet {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw AlphaOutOfRange("alpha must lie in [0, 1]");
}

// Largest-magnitude component made real positive, first index on ties.
void fix_eigvec_phase(std::vector<cplx>& v) {
  size_t best = 0;
  double mag = 0.0;
  for (size_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > mag) {
      mag = std::abs(v[i]);
      best = i;
    }
  if (mag == 0.0) return;
  const cplx ph = std::conj(v[best]) / mag;
  for (auto& x : v) x *= ph;
}

}  // namespace

DensityMatrix werner_density(double alpha) {
  check_alpha(alpha);
  ComplexMatrix m(3);
  m(0, 0) = (1.0 - alpha) / 3.0;
  m(1, 1) = (1.0 + 2.0 * alpha) / 3.0;
  m(2, 2) = (1.0 - alpha) / 3.0;
  return DensityMatrix(m);
}

DensityMatrix werner_state(double alpha, double theta) {
  const DensityMatrix rho0 = werner_density(alpha);
  const auto ops = build_operators(2);
  const ComplexMatrix u = evolve_unitary(ops.jy, theta);
  return DensityMatrix(u * rho0.matrix() * u.adjoint());
}

double werner_qfi(double alpha, const std::array<double, 3>& n_axis) {
  check_alpha(alpha);
  const double len = std::sqrt(n_axis[0] * n_axis[0] + n_axis[1] * n_axis[1] +
                               n_axis[2] * n_axis[2]);
  if (std::abs(len - 1.0) > 1e-10) throw BadAxis("rotation axis must be a unit vector");
  return 12.0 * alpha * alpha * (n_axis[0] * n_axis[0] + n_axis[1] * n_axis[1]) /
         (2.0 + alpha);
}

std::array<double, 3> werner_probabilities(double alpha, double theta) {
  check_alpha(alpha);
  const double sin2 = std::sin(theta) * std::sin(theta);
  const double cos2 = std::cos(theta) * std::cos(theta);
  const double edge = (1.0 - alpha) / 3.0 + alpha / 2.0 * sin2;
  const double mid = (1.0 - alpha) / 3.0 + alpha * cos2;
  return {edge, mid, edge};
}

double werner_imbalance_cfi(double alpha, double theta) {
  check_alpha(alpha);
  if (alpha >= 1.0 - 1e-12) return 4.0;  // removable 0/0 at theta in {0, pi/2, pi}
  const double c2 = std::cos(2.0 * theta);
  const double s2 = std::sin(2.0 * theta);
  const double d1 = 4.0 - alpha * (1.0 + 3.0 * c2);
  const double d2 = 2.0 + alpha * (1.0 + 3.0 * c2);
  if (d1 * d2 < 1e-300) throw DegenerateDenominator("imbalance CFI denominator vanished");
  return 36.0 * alpha * alpha * s2 * s2 / (d1 * d2);
}

ComplexMatrix werner_sld(double alpha, double theta) {
  const DensityMatrix rho = werner_state(alpha, theta);
  const auto ops = build_operators(2);
  return cplx(0.0, -6.0 / (2.0 + alpha)) * commutator(ops.jy, rho.matrix());
}

SldEigensystem werner_sld_eigensystem(double alpha, double theta) {
  check_alpha(alpha);
  if (alpha < 1e-12) throw AlphaZero("SLD vanishes identically at alpha = 0");
  const double lam = 6.0 * alpha / (2.0 + alpha);
  const double c = std::cos(theta), s = std::sin(theta);
  const double r = 1.0 / std::sqrt(2.0);
  // In the basis (|0,2>, |1,1>, |2,0>), with |psi_-+> = (|2,0> -+ |0,2>)/sqrt2:
  //   Psi_1 = ((c+s)/sqrt2)|psi_-> - ((c-s)/sqrt2)|1,1>   eigenvalue +lam
  //   Psi_2 = ((c-s)/sqrt2)|psi_-> + ((c+s)/sqrt2)|1,1>   eigenvalue -lam
  //   Psi_3 = |psi_+>                                     eigenvalue 0
  SldEigensystem out;
  out.eigenvalues = {lam, -lam, 0.0};
  out.states[0] = {-0.5 * (c + s), -r * (c - s), 0.5 * (c + s)};
  out.states[1] = {-0.5 * (c - s), r * (c + s), 0.5 * (c - s)};
  out.states[2] = {r, 0.0, r};
  for (auto& v : out.states) fix_eigvec_phase(v);
  return out;
}

PovmSet werner_sld_projectors(double alpha, double theta) {
  const auto sys = werner_sld_eigensystem(alpha, theta);
  std::vector<ComplexMatrix> proj;
  proj.reserve(3);
  for (const auto& v : sys.states) proj.push_back(outer(v, v));
  return PovmSet(std::move(proj));
}

PovmSet werner_fock_projectors() {
  std::vector<ComplexMatrix> proj;
  proj.reserve(3);
  for (int k = 0; k < 3; ++k) {
    ComplexMatrix p(3);
    p(k, k) = 1.0;
    proj.push_back(p);
  }
  return PovmSet(std::move(proj));
}

ComplexMatrix disentangling_map() {
  const auto ops = build_operators(2);
  const ComplexMatrix k = cplx(0.5) * (ops.jx * ops.jy + ops.jy * ops.jx);
  return evolve_unitary(k, -0.5 * std::numbers::pi) *
         evolve_unitary(ops.jy, 0.25 * std::numbers::pi);
}

}  // namespace qmet
