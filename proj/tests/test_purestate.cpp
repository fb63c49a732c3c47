#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qmet/fisher.hpp"
#include "qmet/purestate.hpp"
#include "qmet/rng.hpp"

using namespace qmet;

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
  return r;
}

SymmetricState random_state(int n, Rng& rng) {
  std::vector<cplx> c(n + 1);
  for (auto& x : c) x = cplx(2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0);
  return state_from_coeffs(n, c);
}

SymmetricState css_state(int n) {
  std::vector<cplx> c(n + 1);
  for (int j = 0; j <= n; ++j) c[j] = std::sqrt(binom(n, j)) / std::pow(2.0, 0.5 * n);
  return make_state(n, c);
}

// coefficients i^j a_j with a real: counting is phase-blind yet optimal for x
SymmetricState quarter_phase_state(int n, Rng& rng) {
  std::vector<cplx> c(n + 1);
  const cplx i_unit(0.0, 1.0);
  cplx ph = 1.0;
  for (int j = 0; j <= n; ++j) {
    c[j] = ph * cplx(rng.next_double() + 0.1);
    ph *= i_unit;
  }
  return state_from_coeffs(n, c);
}

double qfi_reference(const SymmetricState& psi, Axis axis) {
  const auto ops = build_operators(psi.n);
  return qfi_mixed(DensityMatrix(outer(psi.c, psi.c)), axis_operator(ops, axis));
}

}  // namespace

TEST_CASE("eta of the twin fock state: only the occupied mode is defined") {
  const auto e = eta(twin_fock_state(2), Axis::X);
  CHECK_FALSE(e.defined[0]);
  CHECK(e.defined[1]);
  CHECK_FALSE(e.defined[2]);
  CHECK(std::abs(e.values[1]) < 1e-15);
}

TEST_CASE("eta along z is the occupation ladder, always defined") {
  const auto e = eta(twin_fock_state(4), Axis::Z);
  for (int j = 0; j <= 4; ++j) {
    CHECK(e.defined[j]);
    CHECK(std::abs(e.values[j] - cplx(j - 2.0)) < 1e-15);
  }
}

TEST_CASE("eta times the coefficient reproduces the matrix element") {
  Rng rng(51);
  const auto ops = build_operators(6);
  for (int rep = 0; rep < 20; ++rep) {
    const auto psi = random_state(6, rng);
    for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
      const auto w = axis_operator(ops, ax).apply(psi.c);
      const auto e = eta(psi, ax);
      for (int j = 0; j <= 6; ++j) {
        if (!e.defined[j]) continue;
        CHECK(std::abs(e.values[j] * psi.c[j] - w[j]) < 1e-12);
      }
    }
  }
}

TEST_CASE("breakdown of the twin fock probe: all information in the counts") {
  const auto b2 = qfi_breakdown(twin_fock_state(2), Axis::Y);
  CHECK(std::abs(b2.prob_term - 4.0) < 1e-12);
  CHECK(std::abs(b2.phase_term) < 1e-12);
  CHECK(std::abs(b2.qfi - 4.0) < 1e-12);

  const auto b4 = qfi_breakdown(twin_fock_state(4), Axis::Y);
  CHECK(std::abs(b4.prob_term - 12.0) < 1e-12);
  CHECK(std::abs(b4.qfi - 12.0) < 1e-12);
}

TEST_CASE("breakdown of the noon probe under z: all information in the phase") {
  const auto b = qfi_breakdown(noon_state(6), Axis::Z);
  CHECK(std::abs(b.qfi - 36.0) < 1e-12);
  CHECK(std::abs(b.phase_term - 36.0) < 1e-12);
  CHECK(std::abs(b.prob_term) < 1e-12);
}

TEST_CASE("breakdown of the coherent probe under y") {
  const auto b = qfi_breakdown(css_state(8), Axis::Y);
  CHECK(std::abs(b.qfi - 8.0) < 1e-11);  // shot noise: qfi equals N
  CHECK(std::abs(b.prob_term - 8.0) < 1e-11);
  CHECK(std::abs(b.phase_term) < 1e-11);
}

TEST_CASE("the two terms always add up to the qfi") {
  Rng rng(52);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_double() * 9.0);
    const auto psi = random_state(n, rng);
    for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
      const auto b = qfi_breakdown(psi, ax);
      CHECK(std::abs(b.prob_term + b.phase_term - b.qfi) < 1e-9);
      CHECK(std::abs(b.qfi - qfi_reference(psi, ax)) < 1e-9);
      CHECK(b.prob_term >= -1e-12);
      CHECK(b.phase_term >= -1e-12);
    }
  }
}

TEST_CASE("counting cfi agrees with a finite difference through the rotation") {
  Rng rng(53);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_double() * 5.0);
    const auto psi = random_state(n, rng);
    for (Axis ax : {Axis::X, Axis::Y}) {
      const double f = cfi_mode_counting(psi, ax);
      const std::array<double, 3> axis =
          (ax == Axis::X) ? std::array<double, 3>{1.0, 0.0, 0.0}
                          : std::array<double, 3>{0.0, 1.0, 0.0};
      const double h = 1e-5;
      const auto plus = rotate_state(psi, axis, h);
      const auto minus = rotate_state(psi, axis, -h);
      double fd = 0.0;
      for (int j = 0; j <= n; ++j) {
        const double p = std::norm(psi.c[j]);
        if (p < 1e-12) continue;
        const double dp = (std::norm(plus.c[j]) - std::norm(minus.c[j])) / (2.0 * h);
        fd += dp * dp / p;
      }
      CHECK(std::abs(f - fd) < 1e-4 * std::max(1.0, f));
    }
  }
}

TEST_CASE("counting stays optimal along real-coefficient trajectories") {
  const auto ground = bose_hubbard_ground(8, 1.0);
  for (int i = 0; i < 10; ++i) {
    const double theta = 0.9 * i;
    const auto probe = rotate_state(ground, {0.0, 1.0, 0.0}, theta);
    const auto opt = counting_is_optimal(probe, Axis::Y);
    CHECK(opt.optimal);
    CHECK(opt.deficit < 1e-10);
  }
}

TEST_CASE("quarter-phase families are optimal for x but not for generic real states") {
  Rng rng(54);
  for (int rep = 0; rep < 10; ++rep) {
    const auto psi = quarter_phase_state(7, rng);
    const auto opt = counting_is_optimal(psi, Axis::X);
    CHECK(opt.optimal);
  }
  // a generic real state is not optimal for x
  const auto ground = bose_hubbard_ground(8, 1.0);
  const auto opt_x = counting_is_optimal(ground, Axis::X);
  CHECK_FALSE(opt_x.optimal);
  CHECK(opt_x.deficit > 1e-4);
}

TEST_CASE("counting carries no information about z rotations") {
  Rng rng(55);
  for (int rep = 0; rep < 10; ++rep) {
    const auto psi = random_state(5, rng);
    CHECK(cfi_mode_counting(psi, Axis::Z) < 1e-12);
  }
}

TEST_CASE("far-field fringes: noon scaling and twin fock blindness") {
  CHECK(std::abs(farfield_cfi(noon_state(4), 0.37) - 16.0) < 1e-10);
  CHECK(std::abs(farfield_cfi(twin_fock_state(4), 1.1)) < 1e-12);
  // theta independence
  for (double theta : {0.0, 0.9, 2.2})
    CHECK(std::abs(farfield_cfi(noon_state(4), theta) - 16.0) < 1e-10);
}

TEST_CASE("far-field equals the z-generator qfi for admissible probes") {
  Rng rng(56);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_double() * 6.0);
    std::vector<cplx> c(n + 1);
    for (int j = 0; j <= (n + 1) / 2; ++j) {
      const double v = 2.0 * rng.next_double() - 1.0;
      c[j] = v;
      c[n - j] = v;
    }
    const auto psi = state_from_coeffs(n, c);
    const double f = farfield_cfi(psi, 0.4);
    CHECK(std::abs(f - qfi_reference(psi, Axis::Z)) < 1e-9);
  }
}

TEST_CASE("far-field preconditions: real and symmetric coefficients") {
  CHECK_THROWS_AS(farfield_cfi(fock_state(2, 0), 0.1), PreconditionViolated);
  const double r = 1.0 / std::sqrt(2.0);
  const auto complex_state = make_state(2, {r, 0.0, cplx(0.0, r)});
  CHECK_THROWS_AS(farfield_cfi(complex_state, 0.1), PreconditionViolated);
}
