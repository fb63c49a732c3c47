#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qmet/qubit.hpp"
#include "qmet/rng.hpp"

namespace qmet {

/// Parametric outcome model: probabilities(theta) returns one probability
/// per labeled outcome.
struct OutcomeModel {
  std::vector<std::string> labels;
  std::function<std::vector<double>(double)> probabilities;
};

/// m independent draws from the model at theta, tallied per outcome.
/// Probabilities must be >= -1e-12 (clamped to 0) and sum to 1 within 1e-10,
/// else BadProbabilities. Consumes exactly m uniforms from Rng(seed).
std::vector<long long> sample_counts(const OutcomeModel& model, double theta, long long m,
                                     std::uint64_t seed);

/// Inclusive uniform grid with npoints >= 2 entries.
std::vector<double> uniform_grid(double lo, double hi, int npoints);

/// Maximum-likelihood estimate on the grid: counts-weighted log-likelihood,
/// first maximum on ties (smallest theta), then one parabolic refinement
/// when the maximum is interior with finite neighbors and negative
/// curvature, clamped to the bracketing grid cell. Outcomes with zero count
/// contribute nothing; a positive count on a zero-probability point sends
/// that point to -infinity. Throws DegenerateLikelihood if no grid point
/// has finite likelihood.
double ml_estimate(const std::vector<long long>& counts, const OutcomeModel& model,
                   const std::vector<double>& grid);

struct EstimationResult {
  double theta_true = 0.0;
  long long m = 0;
  int trials = 0;
  double empirical_std = 0.0;
  double crlb = 0.0;       // 1/sqrt(m * fisher)
  double mean_bias = 0.0;  // mean(estimates) - theta_true
  std::vector<double> estimates;

  double ratio() const { return empirical_std / crlb; }
};

/// Repeated-experiment check of the Cramer-Rao bound. Trial t draws m
/// samples at theta_true with the RNG substream substream_seed(seed, t),
/// so results are independent of trial order and count. The ML search grid
/// is the inclusive uniform grid on [grid_lo, grid_hi].
EstimationResult crlb_trial(const OutcomeModel& model, double fisher, double theta_true,
                            long long m, int trials, std::uint64_t seed, double grid_lo,
                            double grid_hi, int grid_points = 2001);

/// Two-outcome model of the optimal qubit measurement anchored at theta0:
/// projective pair along +-q with q = normalized SLD direction of s(theta0).
OutcomeModel qubit_optimal_model(const BlochVector& s, double theta0);

/// Three-outcome occupation model of the rotated Werner probe.
OutcomeModel werner_fock_model(double alpha);

}  // namespace qmet
