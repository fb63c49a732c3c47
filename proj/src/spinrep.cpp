#include "qmet/spinrep.hpp"

#include <cmath>

namespace qmet {

CollectiveOperators build_operators(int n) {
  if (n < 1) throw Error("particle number must be >= 1");
  const int d = n + 1;
  CollectiveOperators ops;
  ops.n = n;
  ops.jx = ComplexMatrix(d);
  ops.jy = ComplexMatrix(d);
  ops.jz = ComplexMatrix(d);
  for (int j = 0; j < d; ++j) ops.jz(j, j) = j - 0.5 * n;
  for (int j = 0; j + 1 < d; ++j) {
    const double half = 0.5 * std::sqrt(static_cast<double>(j + 1) * (n - j));
    ops.jx(j, j + 1) = half;
    ops.jx(j + 1, j) = half;
    ops.jy(j + 1, j) = cplx(0.0, -half);  // alpha_j/(2i)
    ops.jy(j, j + 1) = cplx(0.0, half);
  }
  return ops;
}

const ComplexMatrix& axis_operator(const CollectiveOperators& ops, Axis axis) {
  switch (axis) {
    case Axis::X: return ops.jx;
    case Axis::Y: return ops.jy;
    case Axis::Z: return ops.jz;
  }
  throw BadAxis("unknown axis");
}

SymmetricState make_state(int n, std::vector<cplx> coeffs) {
  if (static_cast<int>(coeffs.size()) != n + 1)
    throw DimensionMismatch("state needs n+1 coefficients");
  if (std::abs(vec_norm(coeffs) - 1.0) > 1e-10) throw Error("state is not normalized");
  return {n, std::move(coeffs)};
}

SymmetricState rotate_state(const SymmetricState& psi, const std::array<double, 3>& n_axis,
                            double theta) {
  const double len =
      std::sqrt(n_axis[0] * n_axis[0] + n_axis[1] * n_axis[1] + n_axis[2] * n_axis[2]);
  if (std::abs(len - 1.0) > 1e-10) throw BadAxis("rotation axis must be a unit vector");
  const auto ops = build_operators(psi.n);
  ComplexMatrix g = cplx(n_axis[0]) * ops.jx;
  g += cplx(n_axis[1]) * ops.jy;
  g += cplx(n_axis[2]) * ops.jz;
  const ComplexMatrix u = evolve_unitary(g, theta);
  return {psi.n, u.apply(psi.c)};
}

SymmetricState fock_state(int n, int k) {
  if (k < 0 || k > n) throw BadFockIndex("mode occupation outside 0..n");
  std::vector<cplx> c(n + 1, 0.0);
  c[k] = 1.0;
  return {n, std::move(c)};
}

SymmetricState noon_state(int n) {
  if (n < 1) throw Error("particle number must be >= 1");
  std::vector<cplx> c(n + 1, 0.0);
  const double r = 1.0 / std::sqrt(2.0);
  c[0] = r;
  c[n] = r;
  return {n, std::move(c)};
}

SymmetricState twin_fock_state(int n) {
  if (n % 2 != 0) throw OddNForTwinFock("twin Fock requires even particle number");
  return fock_state(n, n / 2);
}

namespace {

// Global phase convention: first component with |c_j| > 1e-12 made real
// positive.
void fix_phase(std::vector<cplx>& c) {
  for (auto& x : c)
    if (std::abs(x) > 1e-12) {
      const cplx ph = std::conj(x) / std::abs(x);
      for (auto& y : c) y *= ph;
      return;
    }
}

}  // namespace

SymmetricState bose_hubbard_ground(int n, double u) {
  if (!std::isfinite(u)) throw Error("interaction ratio must be finite");
  const auto ops = build_operators(n);
  ComplexMatrix h = cplx(-2.0) * ops.jx;
  h += cplx(u) * (ops.jz * ops.jz);
  const auto eig = hermitian_eig(h);
  std::vector<cplx> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = eig.eigenvectors(i, 0);
  fix_phase(c);
  return {n, std::move(c)};
}

SymmetricState state_from_coeffs(int n, const std::vector<cplx>& coeffs) {
  if (static_cast<int>(coeffs.size()) != n + 1)
    throw DimensionMismatch("state needs n+1 coefficients");
  const double norm = vec_norm(coeffs);
  if (norm < 1e-12) throw ZeroState("coefficient vector has vanishing norm");
  std::vector<cplx> c(coeffs);
  for (auto& x : c) x /= norm;
  fix_phase(c);
  return {n, std::move(c)};
}

}  // namespace qmet
