#include "qmet/purestate.hpp"

#include <cmath>

namespace qmet {

namespace {

constexpr double kMaskEps = 1e-12;

std::vector<cplx> apply_axis(const SymmetricState& psi, Axis axis) {
  const auto ops = build_operators(psi.n);
  return axis_operator(ops, axis).apply(psi.c);
}

}  // namespace

EtaCoefficients eta(const SymmetricState& psi, Axis axis) {
  const int d = psi.n + 1;
  EtaCoefficients out;
  out.axis = axis;
  out.values.assign(d, 0.0);
  out.defined.assign(d, false);
  if (axis == Axis::Z) {
    for (int j = 0; j < d; ++j) {
      out.values[j] = j - 0.5 * psi.n;
      out.defined[j] = true;
    }
    return out;
  }
  const auto w = apply_axis(psi, axis);
  for (int j = 0; j < d; ++j) {
    if (std::abs(psi.c[j]) <= kMaskEps) continue;
    out.values[j] = w[j] / psi.c[j];
    out.defined[j] = true;
  }
  return out;
}

QfiBreakdown qfi_breakdown(const SymmetricState& psi, Axis axis) {
  const int d = psi.n + 1;
  const auto w = apply_axis(psi, axis);

  double wsq = 0.0;   // <J^2>
  double mean = 0.0;  // <J>
  double prob = 0.0;
  double re_sq = 0.0, re_mean = 0.0;  // defined-entry moments of Re eta
  for (int j = 0; j < d; ++j) {
    wsq += std::norm(w[j]);
    const cplx z = w[j] * std::conj(psi.c[j]);
    mean += z.real();
    const double pj = std::norm(psi.c[j]);
    if (std::abs(psi.c[j]) <= kMaskEps) {
      prob += 4.0 * std::norm(w[j]);  // theta -> 0 limit of (dp)^2/p
      continue;
    }
    prob += 4.0 * z.imag() * z.imag() / pj;
    re_sq += z.real() * z.real() / pj;
    re_mean += z.real();
  }

  QfiBreakdown out;
  out.prob_term = prob;
  out.phase_term = 4.0 * (re_sq - re_mean * re_mean);
  out.qfi = 4.0 * (wsq - mean * mean);
  if (std::abs(out.prob_term + out.phase_term - out.qfi) > 1e-8)
    throw BreakdownMismatch("prob_term + phase_term does not reproduce the QFI");
  return out;
}

double cfi_mode_counting(const SymmetricState& psi, Axis axis) {
  return qfi_breakdown(psi, axis).prob_term;
}

CountingOptimality counting_is_optimal(const SymmetricState& psi, Axis axis) {
  const auto b = qfi_breakdown(psi, axis);
  return {b.phase_term < 1e-10, b.phase_term};
}

double farfield_cfi(const SymmetricState& psi, double theta) {
  const int d = psi.n + 1;
  for (int j = 0; j < d; ++j) {
    if (std::abs(psi.c[j].imag()) > 1e-10)
      throw PreconditionViolated("far-field formula needs real coefficients");
    if (std::abs(psi.c[j] - psi.c[d - 1 - j]) > 1e-10)
      throw PreconditionViolated("far-field formula needs j <-> N-j symmetry");
  }
  // Phase imprint e^{-i theta J_z} leaves |C_j| unchanged, so Var(J_z) of
  // the imprinted state equals that of psi; computed explicitly anyway.
  double zsq = 0.0, zmean = 0.0;
  for (int j = 0; j < d; ++j) {
    const double m = j - 0.5 * psi.n;
    const double pj = std::norm(psi.c[j] * std::exp(cplx(0.0, -theta * m)));
    zsq += m * m * pj;
    zmean += m * pj;
  }
  return 4.0 * (zsq - zmean * zmean);
}

}  // namespace qmet
