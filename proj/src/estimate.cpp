#include "qmet/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qmet/werner.hpp"

namespace qmet {

std::vector<long long> sample_counts(const OutcomeModel& model, double theta, long long m,
                                     std::uint64_t seed) {
  std::vector<double> p = model.probabilities(theta);
  if (p.empty()) throw BadProbabilities("model returned no outcomes");
  double sum = 0.0;
  for (auto& x : p) {
    if (x < -1e-12) throw BadProbabilities("negative outcome probability");
    x = std::max(x, 0.0);
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-10) throw BadProbabilities("probabilities do not sum to 1");

  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (size_t k = 0; k < p.size(); ++k) {
    acc += p[k];
    cdf[k] = acc;
  }

  std::vector<long long> counts(p.size(), 0);
  Rng rng(seed);
  const size_t last = p.size() - 1;
  for (long long i = 0; i < m; ++i) {
    const double u = rng.next_double();
    size_t k = 0;
    while (k < last && u >= cdf[k]) ++k;
    ++counts[k];
  }
  return counts;
}

std::vector<double> uniform_grid(double lo, double hi, int npoints) {
  if (npoints < 2) throw Error("grid needs at least 2 points");
  std::vector<double> g(npoints);
  const double step = (hi - lo) / (npoints - 1);
  for (int i = 0; i < npoints; ++i) g[i] = lo + i * step;
  return g;
}

double ml_estimate(const std::vector<long long>& counts, const OutcomeModel& model,
                   const std::vector<double>& grid) {
  if (grid.size() < 3) throw Error("grid needs at least 3 points");
  if (counts.size() != model.labels.size())
    throw DimensionMismatch("counts do not match model outcomes");

  const double neg_inf = -std::numeric_limits<double>::infinity();
  std::vector<double> loglik(grid.size(), 0.0);
  for (size_t i = 0; i < grid.size(); ++i) {
    const std::vector<double> p = model.probabilities(grid[i]);
    double l = 0.0;
    for (size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] == 0) continue;
      if (p[k] <= 0.0) {
        l = neg_inf;
        break;
      }
      l += static_cast<double>(counts[k]) * std::log(p[k]);
    }
    loglik[i] = l;
  }

  size_t best = 0;
  for (size_t i = 1; i < grid.size(); ++i)
    if (loglik[i] > loglik[best]) best = i;  // strict: ties keep smallest theta
  if (!std::isfinite(loglik[best]))
    throw DegenerateLikelihood("likelihood vanished on the whole grid");

  if (best == 0 || best == grid.size() - 1) return grid[best];
  const double l0 = loglik[best - 1], l1 = loglik[best], l2 = loglik[best + 1];
  if (!std::isfinite(l0) || !std::isfinite(l2)) return grid[best];
  const double den = l0 - 2.0 * l1 + l2;
  if (!(den < 0.0)) return grid[best];
  const double h = grid[best + 1] - grid[best];
  const double v = grid[best] + 0.5 * h * (l0 - l2) / den;
  return std::clamp(v, grid[best - 1], grid[best + 1]);
}

EstimationResult crlb_trial(const OutcomeModel& model, double fisher, double theta_true,
                            long long m, int trials, std::uint64_t seed, double grid_lo,
                            double grid_hi, int grid_points) {
  if (m < 1) throw Error("need at least one sample per trial");
  if (trials < 2) throw Error("need at least two trials");
  if (!(fisher > 0.0)) throw Error("Fisher information must be positive");
  const std::vector<double> grid = uniform_grid(grid_lo, grid_hi, grid_points);

  EstimationResult out;
  out.theta_true = theta_true;
  out.m = m;
  out.trials = trials;
  out.estimates.resize(trials);
  for (int t = 0; t < trials; ++t) {
    const auto counts = sample_counts(model, theta_true, m, substream_seed(seed, t));
    out.estimates[t] = ml_estimate(counts, model, grid);
  }

  double mean = 0.0;
  for (double e : out.estimates) mean += e;
  mean /= trials;
  double ss = 0.0;
  for (double e : out.estimates) ss += (e - mean) * (e - mean);
  out.empirical_std = std::sqrt(ss / (trials - 1));
  out.crlb = 1.0 / std::sqrt(static_cast<double>(m) * fisher);
  out.mean_bias = mean - theta_true;
  return out;
}

OutcomeModel qubit_optimal_model(const BlochVector& s, double theta0) {
  const BlochVector anchor = rotate_bloch(s, theta0);
  std::array<double, 3> q = qubit_sld(anchor);
  const double len = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2]);
  if (len < 1e-12) throw ZeroState("SLD direction vanishes at the anchor point");
  for (auto& x : q) x /= len;

  OutcomeModel model;
  model.labels = {"plus", "minus"};
  model.probabilities = [s, q](double theta) {
    const BlochVector st = rotate_bloch(s, theta);
    const QubitPovmElement plus{0.5, q};
    const QubitPovmElement minus{0.5, {-q[0], -q[1], -q[2]}};
    return std::vector<double>{povm_probability(st, plus), povm_probability(st, minus)};
  };
  return model;
}

OutcomeModel werner_fock_model(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw AlphaOutOfRange("alpha must lie in [0, 1]");
  OutcomeModel model;
  model.labels = {"n0", "n1", "n2"};
  model.probabilities = [alpha](double theta) {
    const auto p = werner_probabilities(alpha, theta);
    return std::vector<double>{p[0], p[1], p[2]};
  };
  return model;
}

}  // namespace qmet
