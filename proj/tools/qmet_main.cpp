// qmet: command line front end for the phase-estimation toolkit.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qmet/estimate.hpp"
#include "qmet/fisher.hpp"
#include "qmet/purestate.hpp"
#include "qmet/qubit.hpp"
#include "qmet/spinrep.hpp"
#include "qmet/werner.hpp"

namespace {

using qmet::cplx;

const double pi = std::acos(-1.0);

/// Command line value that failed to parse or validate.
struct UsageError : qmet::Error {
  using qmet::Error::Error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& t) {
  try {
    size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw UsageError("trailing characters in number: " + t);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("not a number: " + t);
  }
}

// Accepts "1.5", "-2e-3", "2i", "i", "-i", "1+2i", "1-i", "-0.5+0.25i".
cplx parse_complex(const std::string& token) {
  std::string t = token;
  if (t.empty()) throw UsageError("empty coefficient");
  if (t.back() != 'i' && t.back() != 'I') return cplx(parse_double(t), 0.0);
  t.pop_back();
  if (t.empty() || t == "+") return cplx(0.0, 1.0);
  if (t == "-") return cplx(0.0, -1.0);
  // split at the last +/- that is not an exponent sign and not leading
  size_t pos = std::string::npos;
  for (size_t i = t.size(); i-- > 1;) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      pos = i;
      break;
    }
  }
  if (pos == std::string::npos) return cplx(0.0, parse_double(t));
  const std::string re = t.substr(0, pos);
  std::string im = t.substr(pos);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return cplx(parse_double(re), parse_double(im));
}

qmet::BlochVector parse_bloch(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 3) throw UsageError("--s needs three comma-separated components");
  qmet::BlochVector v{parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2])};
  if (v.norm() > 1.0 + 1e-10) throw UsageError("Bloch vector longer than 1");
  return v;
}

qmet::Axis parse_axis(const std::string& s) {
  if (s == "x") return qmet::Axis::X;
  if (s == "y") return qmet::Axis::Y;
  if (s == "z") return qmet::Axis::Z;
  throw UsageError("axis must be x, y or z");
}

// "fock:K" | "noon" | "twin-fock" | "bh:U" | "coeffs:c0,c1,..."
qmet::SymmetricState parse_state(int n, const std::string& spec) {
  if (spec == "noon") return qmet::noon_state(n);
  if (spec == "twin-fock") return qmet::twin_fock_state(n);
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = (colon == std::string::npos) ? "" : spec.substr(colon + 1);
  if (kind == "fock") {
    const double k = parse_double(arg);
    if (k != std::floor(k)) throw UsageError("fock index must be an integer");
    return qmet::fock_state(n, static_cast<int>(k));
  }
  if (kind == "bh") return qmet::bose_hubbard_ground(n, parse_double(arg));
  if (kind == "coeffs") {
    std::vector<cplx> c;
    for (const auto& tok : split(arg, ',')) c.push_back(parse_complex(tok));
    return qmet::state_from_coeffs(n, c);
  }
  throw UsageError("unknown state spec: " + spec);
}

class CsvSink {
 public:
  explicit CsvSink(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file: " + path);
    }
  }
  void line(const std::string& s) {
    std::ostream& os = file_.is_open() ? file_ : std::cout;
    os << s << "\n";
  }

 private:
  std::ofstream file_;
};

// ---- werner-fig2 -----------------------------------------------------------

struct Fig2Opts {
  std::string alphas = "0.5,0.95,1.0";
  int steps = 200;
  double theta_min = 0.0;
  double theta_max = pi;
  std::string output = "-";
};

void run_fig2(const Fig2Opts& o) {
  if (o.steps < 1) throw UsageError("--theta-steps must be positive");
  const auto tokens = split(o.alphas, ',');
  std::vector<double> alphas;
  for (const auto& tok : tokens) alphas.push_back(parse_double(tok));

  CsvSink sink(o.output);
  std::string header = "theta";
  for (const auto& tok : tokens) header += ",cfi_imb_" + tok + ",qfi_" + tok;
  sink.line(header);

  const std::array<double, 3> yaxis{0.0, 1.0, 0.0};
  for (int i = 0; i <= o.steps; ++i) {
    const double theta = o.theta_min + i * (o.theta_max - o.theta_min) / o.steps;
    std::string row = fmt(theta);
    for (double a : alphas) {
      row += "," + fmt(qmet::werner_imbalance_cfi(a, theta));
      row += "," + fmt(qmet::werner_qfi(a, yaxis));
    }
    sink.line(row);
  }
}

// ---- qfi -------------------------------------------------------------------

void run_qfi_qubit(const std::string& s_str) {
  const auto s = parse_bloch(s_str);
  const double f = qmet::qubit_qfi(s);
  std::cout << "qfi=" << fmt(f) << "\n";
}

void run_qfi_werner(double alpha, const std::string& axis_str) {
  const qmet::Axis axis = parse_axis(axis_str);
  std::array<double, 3> n{0.0, 0.0, 0.0};
  n[axis == qmet::Axis::X ? 0 : axis == qmet::Axis::Y ? 1 : 2] = 1.0;
  const double f = qmet::werner_qfi(alpha, n);
  std::cout << "qfi=" << fmt(f) << "\n";
}

void run_qfi_pure(int n, const std::string& spec, const std::string& axis_str) {
  if (n < 1) throw UsageError("--n must be at least 1");
  const qmet::Axis axis = parse_axis(axis_str);
  const auto psi = parse_state(n, spec);
  const auto b = qmet::qfi_breakdown(psi, axis);
  const auto opt = qmet::counting_is_optimal(psi, axis);
  std::cout << "qfi=" << fmt(b.qfi) << "\n"
            << "prob_term=" << fmt(b.prob_term) << "\n"
            << "phase_term=" << fmt(b.phase_term) << "\n"
            << "counting_optimal=" << (opt.optimal ? "yes" : "no") << "\n";
}

// ---- povm-check ------------------------------------------------------------

void report_elements(const std::vector<qmet::ComplexMatrix>& elements,
                     const qmet::DensityMatrix& rho, const qmet::ComplexMatrix& l) {
  bool all = true;
  for (size_t k = 0; k < elements.size(); ++k) {
    // an element with no weight at rho never fires; it carries no verdict
    if ((elements[k] * rho.matrix()).frobenius_norm() < 1e-12) {
      std::cout << "element " << k << ": weight=0 optimal=vacuous\n";
      continue;
    }
    const auto chk = qmet::check_optimal(elements[k], rho, l);
    all = all && chk.optimal;
    std::cout << "element " << k << ": lambda=" << fmt(chk.lambda)
              << " residual=" << fmt(chk.residual)
              << " optimal=" << (chk.optimal ? "yes" : "no") << "\n";
  }
  std::cout << "all_optimal=" << (all ? "yes" : "no") << "\n";
}

void run_povm_qubit(const std::string& s_str, double phi_deg, const std::string& q_str) {
  const auto s = parse_bloch(s_str);
  std::array<double, 3> q;
  if (!q_str.empty()) {
    const auto parts = split(q_str, ',');
    if (parts.size() != 3) throw UsageError("--q needs three comma-separated components");
    for (int k = 0; k < 3; ++k) q[k] = parse_double(parts[k]);
    if (q[0] * q[0] + q[1] * q[1] + q[2] * q[2] > 1.0 + 1e-10)
      throw UsageError("measurement direction longer than 1");
  } else {
    q = qmet::optimal_q_solutions(s).q_circle(phi_deg * pi / 180.0);
  }
  const qmet::DensityMatrix rho(qmet::bloch_density(s));
  const qmet::ComplexMatrix l = qmet::bloch_operator(qmet::qubit_sld(s));
  const std::vector<qmet::ComplexMatrix> elements = {
      qmet::povm_element_matrix({0.5, q}),
      qmet::povm_element_matrix({0.5, {-q[0], -q[1], -q[2]}})};
  report_elements(elements, rho, l);
}

void run_povm_werner(double alpha, double theta, const std::string& which) {
  const qmet::DensityMatrix rho = qmet::werner_state(alpha, theta);
  const qmet::ComplexMatrix l = qmet::werner_sld(alpha, theta);
  if (which == "sld") {
    report_elements(qmet::werner_sld_projectors(alpha, theta).elements(), rho, l);
  } else if (which == "fock") {
    report_elements(qmet::werner_fock_projectors().elements(), rho, l);
  } else {
    throw UsageError("--povm must be sld or fock");
  }
}

// ---- estimate --------------------------------------------------------------

struct EstimateOpts {
  std::string model;
  std::string s_str = "1,0,0";
  double alpha = -1.0;
  double theta0 = 0.0;
  long long m = 10000;
  int trials = 200;
  std::uint64_t seed = 7;
  double grid_lo = 0.0, grid_hi = 0.0;
  bool grid_set = false;
  int grid_points = 2001;
  std::string output;
};

void run_estimate(const EstimateOpts& o) {
  qmet::OutcomeModel model;
  double fisher = 0.0;
  double lo = o.grid_lo, hi = o.grid_hi;
  if (o.model == "qubit") {
    const auto s = parse_bloch(o.s_str);
    model = qmet::qubit_optimal_model(s, o.theta0);
    fisher = qmet::qubit_qfi(s);
    if (!o.grid_set) {
      lo = o.theta0 - 0.5 * pi;
      hi = o.theta0 + 0.5 * pi;
    }
  } else if (o.model == "werner") {
    if (o.alpha < 0.0) throw UsageError("--alpha is required for the werner model");
    model = qmet::werner_fock_model(o.alpha);
    fisher = qmet::werner_imbalance_cfi(o.alpha, o.theta0);
    if (!o.grid_set) {
      lo = 0.0;
      hi = 0.5 * pi;
    }
  } else {
    throw UsageError("--model must be qubit or werner");
  }
  if (!(fisher > 0.0)) throw UsageError("measurement carries no information at theta0");

  const auto res = qmet::crlb_trial(model, fisher, o.theta0, o.m, o.trials, o.seed, lo, hi,
                                    o.grid_points);

  if (!o.output.empty()) {
    CsvSink sink(o.output);
    sink.line("trial,theta_hat");
    for (int t = 0; t < res.trials; ++t)
      sink.line(std::to_string(t) + "," + fmt(res.estimates[t]));
  }
  std::cout << "theta_true=" << fmt(res.theta_true) << "\n"
            << "m=" << res.m << "\n"
            << "trials=" << res.trials << "\n"
            << "fisher=" << fmt(fisher) << "\n"
            << "empirical_std=" << fmt(res.empirical_std) << "\n"
            << "crlb=" << fmt(res.crlb) << "\n"
            << "ratio=" << fmt(res.ratio()) << "\n"
            << "mean_bias=" << fmt(res.mean_bias) << "\n";
}

int classify(const qmet::Error& e) {
  if (dynamic_cast<const UsageError*>(&e) || dynamic_cast<const qmet::AlphaOutOfRange*>(&e) ||
      dynamic_cast<const qmet::BadAxis*>(&e) || dynamic_cast<const qmet::BadFockIndex*>(&e) ||
      dynamic_cast<const qmet::OddNForTwinFock*>(&e) ||
      dynamic_cast<const qmet::ZeroState*>(&e) || dynamic_cast<const qmet::OutOfPlane*>(&e) ||
      dynamic_cast<const qmet::InvalidPovm*>(&e) ||
      dynamic_cast<const qmet::NotDensityMatrix*>(&e) ||
      dynamic_cast<const qmet::DimensionMismatch*>(&e) ||
      dynamic_cast<const qmet::PoleAtUnitSz*>(&e) ||
      dynamic_cast<const qmet::BadProbabilities*>(&e))
    return 2;
  return 1;  // numerical failure inside a computation
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal-measurement toolkit for interferometric phase estimation"};
  app.require_subcommand(1);

  Fig2Opts fig2;
  auto* cmd_fig2 = app.add_subcommand("werner-fig2",
                                      "occupation CFI and QFI of the rotated Werner probe");
  cmd_fig2->add_option("--alphas", fig2.alphas, "comma-separated mixing parameters");
  cmd_fig2->add_option("--theta-steps", fig2.steps, "number of grid intervals");
  cmd_fig2->add_option("--theta-min", fig2.theta_min, "grid start");
  cmd_fig2->add_option("--theta-max", fig2.theta_max, "grid end");
  cmd_fig2->add_option("-o,--output", fig2.output, "CSV path, '-' for stdout");
  cmd_fig2->callback([&] { run_fig2(fig2); });

  auto* cmd_qfi = app.add_subcommand("qfi", "quantum Fisher information of a probe");
  cmd_qfi->require_subcommand(1);

  std::string qfi_s = "1,0,0";
  auto* qfi_qubit = cmd_qfi->add_subcommand("qubit", "single-qubit probe");
  qfi_qubit->add_option("--s", qfi_s, "Bloch vector sx,sy,sz");
  qfi_qubit->callback([&] { run_qfi_qubit(qfi_s); });

  double qfi_alpha = 1.0;
  std::string qfi_waxis = "y";
  auto* qfi_werner = cmd_qfi->add_subcommand("werner", "two-qubit Werner probe");
  qfi_werner->add_option("--alpha", qfi_alpha, "mixing parameter")->required();
  qfi_werner->add_option("--axis", qfi_waxis, "rotation axis (x, y or z)");
  qfi_werner->callback([&] { run_qfi_werner(qfi_alpha, qfi_waxis); });

  int qfi_n = 2;
  std::string qfi_state, qfi_paxis = "y";
  auto* qfi_pure = cmd_qfi->add_subcommand("pure", "N-particle pure probe");
  qfi_pure->add_option("--n", qfi_n, "particle number")->required();
  qfi_pure->add_option("--state", qfi_state,
                       "fock:K | noon | twin-fock | bh:U | coeffs:c0,c1,...")
      ->required();
  qfi_pure->add_option("--axis", qfi_paxis, "generator axis (x, y or z)");
  qfi_pure->callback([&] { run_qfi_pure(qfi_n, qfi_state, qfi_paxis); });

  auto* cmd_povm = app.add_subcommand("povm-check",
                                      "saturation test for measurement elements");
  cmd_povm->require_subcommand(1);

  std::string povm_s = "1,0,0", povm_q;
  double povm_phi = 90.0;
  auto* povm_qubit = cmd_povm->add_subcommand("qubit", "projective pair on one qubit");
  povm_qubit->add_option("--s", povm_s, "Bloch vector sx,sy,sz");
  povm_qubit->add_option("--phi-deg", povm_phi, "direction angle in the family plane");
  povm_qubit->add_option("--q", povm_q, "explicit direction qx,qy,qz (overrides --phi-deg)");
  povm_qubit->callback([&] { run_povm_qubit(povm_s, povm_phi, povm_q); });

  double povm_alpha = 1.0, povm_theta = 0.5;
  std::string povm_which = "sld";
  auto* povm_werner = cmd_povm->add_subcommand("werner", "projectors on the Werner probe");
  povm_werner->add_option("--alpha", povm_alpha, "mixing parameter")->required();
  povm_werner->add_option("--theta", povm_theta, "phase of the probe");
  povm_werner->add_option("--povm", povm_which, "sld (optimal) or fock (occupation)");
  povm_werner->callback([&] { run_povm_werner(povm_alpha, povm_theta, povm_which); });

  EstimateOpts est;
  auto* cmd_est = app.add_subcommand("estimate",
                                     "Monte Carlo check of the Cramer-Rao bound");
  cmd_est->add_option("--model", est.model, "qubit or werner")->required();
  cmd_est->add_option("--s", est.s_str, "Bloch vector for the qubit model");
  cmd_est->add_option("--alpha", est.alpha, "mixing parameter for the werner model");
  cmd_est->add_option("--theta0", est.theta0, "true phase")->required();
  cmd_est->add_option("--m", est.m, "samples per trial");
  cmd_est->add_option("--trials", est.trials, "number of repeated experiments");
  cmd_est->add_option("--seed", est.seed, "RNG seed")->envname("QMET_SEED");
  auto* lo_opt = cmd_est->add_option("--grid-lo", est.grid_lo, "search window start");
  auto* hi_opt = cmd_est->add_option("--grid-hi", est.grid_hi, "search window end");
  lo_opt->needs(hi_opt);
  hi_opt->needs(lo_opt);
  cmd_est->add_option("--grid-points", est.grid_points, "search grid size");
  cmd_est->add_option("-o,--output", est.output, "per-trial CSV path");
  cmd_est->callback([&] {
    est.grid_set = (lo_opt->count() > 0) && (hi_opt->count() > 0);
    run_estimate(est);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const qmet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
