// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface: P_max for a state file, family sweeps as CSV,
// invariant check suites, and reduced-state printing. All output is
// deterministic for a fixed invocation (including --seed).

#include "groverian/groverian.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace groverian;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

std::string fmt_complex(Complex z) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.15g%+.15gi", z.real(), z.imag());
  return buf;
}

void print_assignment(const ProductAssignment& pa) {
  for (int k = 0; k < pa.parties(); ++k) {
    std::cout << "assignment[" << (k + 1) << "] =";
    for (long i = 0; i < pa.locals[k].size(); ++i)
      std::cout << " " << fmt_complex(pa.locals[k](i));
    std::cout << "\n";
  }
}

// Recognize the W-type support patterns the closed forms cover.
// Returns P_max or nullopt when the state is not a recognized family member.
std::optional<double> closed_form_pmax(const PureState& psi) {
  if (psi.dims != std::vector<int>{2, 2, 2}) return std::nullopt;
  const Vector& a = psi.amps;
  auto near_zero = [](Complex z) { return std::abs(z) <= 1e-12; };
  for (long i : {0L, 3L, 5L, 6L})
    if (!near_zero(a(i))) return std::nullopt;
  double c100 = std::abs(a(4)), c010 = std::abs(a(2)), c001 = std::abs(a(1));
  double c111 = std::abs(a(7));
  if (c111 <= 1e-12) {
    if (c100 + c010 + c001 <= 1e-12) return std::nullopt;
    return wtype_general_pmax(c100, c010, c001);
  }
  // w4 family: coefficients (1, k, k^2, k^3) up to normalization, and the
  // gauge-invariant phase combination must vanish
  if (c100 <= 1e-12) return std::nullopt;
  double kappa = c010 / c100;
  if (std::abs(c001 - kappa * kappa * c100) > 1e-9 ||
      std::abs(c111 - kappa * kappa * kappa * c100) > 1e-9)
    return std::nullopt;
  double phase = std::arg(a(7)) - std::arg(a(4)) - std::arg(a(2)) - std::arg(a(1));
  double wrapped = std::remainder(phase, 2.0 * std::numbers::pi);
  if (std::abs(wrapped) > 1e-9) return std::nullopt;
  return w4_pmax(kappa).p_max;
}

int cmd_pmax(const std::string& path, const std::string& method,
             const SolverConfig& cfg) {
  PureState psi = load_state(path);
  psi = normalize(psi);

  if (method == "closed") {
    auto p = closed_form_pmax(psi);
    if (!p) throw std::invalid_argument(
        "closed-form method needs a recognized W-type family state");
    std::cout << "method = closed\n"
              << "p_max = " << fmt(*p) << "\n"
              << "groverian = " << fmt(groverian_measure(*p)) << "\n"
              << "converged = true\n";
    return 0;
  }
  if (method == "grid") {
    double p = grid_pmax(psi);
    std::cout << "method = grid\n"
              << "p_max = " << fmt(p) << "\n"
              << "groverian = " << fmt(groverian_measure(p)) << "\n"
              << "converged = true\n";
    return 0;
  }

  PmaxReport report;
  if (method == "direct") {
    report = alternating_pmax(psi, cfg);
    std::cout << "method = direct\n";
  } else if (method.rfind("reduced:", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(method.substr(8));
    } catch (...) {
      throw std::invalid_argument("bad reduced site in --method");
    }
    if (k < 1 || k > psi.parties())
      throw std::invalid_argument("reduced site out of range");
    report = pmax_via_reduced(psi, k - 1, cfg);
    std::cout << "method = reduced:" << k << "\n";
  } else {
    throw std::invalid_argument("unknown method: " + method);
  }

  std::cout << "p_max = " << fmt(report.p_max) << "\n"
            << "groverian = " << fmt(report.groverian) << "\n"
            << "converged = " << (report.converged ? "true" : "false") << "\n";
  print_assignment(report.best_assignment);
  return report.converged ? 0 : 2;
}

int cmd_sweep(const std::string& family, double kmin, double kmax, int steps,
              bool with_grid, const std::string& out_path,
              const SolverConfig& cfg) {
  if (!(kmin >= 0) || !(kmin < kmax)) throw std::invalid_argument("bad kappa range");
  if (steps < 2) throw std::invalid_argument("steps must be >= 2");
  if (family != "w3" && family != "w4")
    throw std::invalid_argument("family must be w3 or w4");

  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::invalid_argument("cannot write " + out_path);
    os = &file;
  }

  *os << "kappa,p_closed,p_alt,p_grid,regime,groverian\n";
  const bool log_spaced = kmin > 0;
  for (int i = 0; i < steps; ++i) {
    double t = static_cast<double>(i) / (steps - 1);
    double kappa = log_spaced
                       ? kmin * std::pow(kmax / kmin, t)
                       : kmin + (kmax - kmin) * t;
    FamilyCurvePoint pt = family == "w3" ? w3_pmax(kappa) : w4_pmax(kappa);
    PureState psi = family == "w3" ? w3_state(kappa) : w4_state(kappa);
    double p_alt = alternating_pmax(psi, cfg).p_max;
    std::string p_grid;
    if (with_grid) p_grid = fmt(grid_pmax(psi));
    *os << fmt(kappa) << "," << fmt(pt.p_max) << "," << fmt(p_alt) << ","
        << p_grid << "," << regime_name(pt.regime) << ","
        << fmt(groverian_measure(pt.p_max)) << "\n";
  }
  return 0;
}

int cmd_check(const std::string& suite, std::uint64_t seed, int samples) {
  std::vector<SuiteResult> results;
  if (suite == "bounds" || suite == "all")
    results.push_back(run_bounds_suite(seed, samples));
  if (suite == "theorem1" || suite == "all")
    results.push_back(run_theorem1_suite(seed, samples));
  if (suite == "lu" || suite == "all")
    results.push_back(run_lu_suite(seed, samples));
  if (results.empty()) throw std::invalid_argument("unknown suite: " + suite);

  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail
              << " (worst-case slack " << fmt(r.worst_slack) << ")\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 2;
}

int cmd_reduce(const std::string& path, int trace_out) {
  PureState psi = normalize(load_state(path));
  if (trace_out < 1 || trace_out > psi.parties())
    throw std::invalid_argument("--trace-out party out of range");
  DensityOperator red =
      partial_trace(density_from_pure(psi), {trace_out - 1});
  for (long i = 0; i < red.mat.rows(); ++i) {
    for (long j = 0; j < red.mat.cols(); ++j) {
      if (j) std::cout << " ";
      std::cout << fmt_complex(red.mat(i, j));
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groverian / Geometric entanglement measure toolkit"};
  app.require_subcommand(1);

  SolverConfig cfg;

  std::string state_path, method = "direct";
  auto* pmax = app.add_subcommand("pmax", "compute P_max for a state file");
  pmax->add_option("file", state_path, "state file (JSON)")->required();
  pmax->add_option("--method", method,
                   "direct | reduced:k | closed | grid");
  pmax->add_option("--tol", cfg.tol);
  pmax->add_option("--starts", cfg.starts);
  pmax->add_option("--seed", cfg.seed);
  pmax->add_option("--max-iter", cfg.max_iter);

  std::string family = "w3", out_path;
  double kmin = 0.05, kmax = 3.0;
  int steps = 60;
  bool with_grid = false;
  auto* sweep = app.add_subcommand("sweep", "sweep a one-parameter family to CSV");
  sweep->add_option("--family", family, "w3 | w4");
  sweep->add_option("--kappa-min", kmin);
  sweep->add_option("--kappa-max", kmax);
  sweep->add_option("--steps", steps);
  sweep->add_flag("--with-grid", with_grid, "also run the grid oracle");
  sweep->add_option("--out", out_path, "CSV output file (default stdout)");
  sweep->add_option("--seed", cfg.seed);

  std::string suite = "all";
  std::uint64_t check_seed = 0;
  int samples = 25;
  auto* check = app.add_subcommand("check", "run invariant suites");
  check->add_option("--suite", suite, "bounds | lu | theorem1 | all");
  check->add_option("--seed", check_seed);
  check->add_option("--samples", samples);

  std::string reduce_path;
  int trace_out = 1;
  auto* reduce = app.add_subcommand("reduce", "print a reduced density matrix");
  reduce->add_option("file", reduce_path, "state file (JSON)")->required();
  reduce->add_option("--trace-out", trace_out, "1-based party to trace out")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (pmax->parsed()) return cmd_pmax(state_path, method, cfg);
    if (sweep->parsed())
      return cmd_sweep(family, kmin, kmax, steps, with_grid, out_path, cfg);
    if (check->parsed()) return cmd_check(suite, check_seed, samples);
    if (reduce->parsed()) return cmd_reduce(reduce_path, trace_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
