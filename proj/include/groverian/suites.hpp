// SPDX-License-Identifier: Apache-2.0
//
// Runnable invariant batteries shared by the CLI `check` subcommand and the
// acceptance tests: lower bound, reduced-path agreement, LU invariance.

#pragma once

#include "groverian/bounds.hpp"
#include "groverian/random_states.hpp"
#include "groverian/solver.hpp"

#include <sstream>
#include <string>

namespace groverian {

struct SuiteResult {
  std::string name;
  bool pass = false;
  double worst_slack = 0.0;  // smallest margin observed (negative = violated)
  std::string detail;
};

// P_max >= 2^{1-n} on random pure states; strict above the bound for n >= 3.
inline SuiteResult run_bounds_suite(std::uint64_t seed, int samples,
                                    const SolverConfig& base = {}) {
  SuiteResult res;
  res.name = "bounds";
  res.pass = true;
  double min_slack = std::numeric_limits<double>::infinity();
  SolverConfig cfg = base;
  cfg.seed = seed;
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> dims(n, 2);
    for (int s = 0; s < samples; ++s) {
      auto rng = make_rng(seed, static_cast<std::uint64_t>(n) * 100000 + s);
      PureState psi = random_pure_state(dims, rng);
      double p = alternating_pmax(psi, cfg).p_max;
      double slack = p - lower_bound(n);
      min_slack = std::min(min_slack, slack);
      if (slack < -1e-9) res.pass = false;
      if (n >= 3 && slack <= 1e-6) res.pass = false;  // Theorem 3 strictness
    }
  }
  res.worst_slack = min_slack;
  std::ostringstream os;
  os << "min P_max - 2^{1-n} over samples: " << min_slack;
  res.detail = os.str();
  return res;
}

// |direct path - reduced path| for every traced party at n = 3 and n = 4.
inline SuiteResult run_theorem1_suite(std::uint64_t seed, int samples,
                                      const SolverConfig& base = {}) {
  SuiteResult res;
  res.name = "theorem1";
  res.pass = true;
  double max_gap = 0.0;
  SolverConfig cfg = base;
  cfg.seed = seed;
  for (int n : {3, 4}) {
    std::vector<int> dims(n, 2);
    for (int s = 0; s < samples; ++s) {
      auto rng = make_rng(seed, static_cast<std::uint64_t>(n) * 200000 + s);
      PureState psi = random_pure_state(dims, rng);
      double direct = alternating_pmax(psi, cfg).p_max;
      for (int k = 0; k < n; ++k) {
        double reduced = pmax_via_reduced(psi, k, cfg).p_max;
        max_gap = std::max(max_gap, std::abs(direct - reduced));
      }
    }
  }
  if (max_gap >= 1e-8) res.pass = false;
  res.worst_slack = 1e-8 - max_gap;
  std::ostringstream os;
  os << "max |direct - reduced| discrepancy: " << max_gap;
  res.detail = os.str();
  return res;
}

// P_max is unchanged by local unitaries on random 3-qubit states.
inline SuiteResult run_lu_suite(std::uint64_t seed, int samples,
                                const SolverConfig& base = {}) {
  SuiteResult res;
  res.name = "lu";
  res.pass = true;
  double max_gap = 0.0;
  SolverConfig cfg = base;
  cfg.seed = seed;
  for (int s = 0; s < samples; ++s) {
    auto rng = make_rng(seed, 300000 + s);
    PureState psi = random_pure_state({2, 2, 2}, rng);
    std::vector<Matrix> units;
    for (int k = 0; k < 3; ++k) units.push_back(random_unitary(2, rng));
    PureState rotated = apply_local_unitaries(psi, units);
    double p0 = alternating_pmax(psi, cfg).p_max;
    double p1 = alternating_pmax(rotated, cfg).p_max;
    max_gap = std::max(max_gap, std::abs(p0 - p1));
  }
  if (max_gap >= 1e-8) res.pass = false;
  res.worst_slack = 1e-8 - max_gap;
  std::ostringstream os;
  os << "max |P_max(psi) - P_max(U psi)|: " << max_gap;
  res.detail = os.str();
  return res;
}

}  // namespace groverian
