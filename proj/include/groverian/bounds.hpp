// SPDX-License-Identifier: Apache-2.0
//
// Executable bounds: the 2^{1-n} lower bound, the reduced-overlap inequality,
// complete-mixedness deviation reports, and an empirical purity-gap witness
// for three qubits (all-mixed reductions force a pure-state residual floor).

#pragma once

#include "groverian/core.hpp"
#include "groverian/solver.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace groverian {

// P_max >= 2^{1-n} for normalized pure states.
inline double lower_bound(int parties) {
  if (parties < 1) throw std::invalid_argument("need at least one party");
  return std::ldexp(1.0, 1 - parties);
}

struct ReducedInequality {
  double lhs = 0.0;   // P_max of the pure state
  double rhs = 0.0;   // 2^{-(n-m-1)} * max product overlap of the reduction
  double slack = 0.0; // lhs - rhs
  bool holds = false;
};

// P_max(rho) >= 2^{-(n-m-1)} P_max(rho^{k1..km}) for a retained qubit subset.
inline ReducedInequality check_reduced_inequality(const PureState& state,
                                                  const std::vector<int>& subset,
                                                  const SolverConfig& cfg = {}) {
  const int n = state.parties();
  for (int d : state.dims)
    if (d != 2) throw std::invalid_argument("reduced inequality is qubit-only");
  const int m = static_cast<int>(subset.size());
  if (m < 1 || m > n - 1) throw std::invalid_argument("subset size out of range");
  std::vector<bool> keep(n, false);
  for (int k : subset) {
    if (k < 0 || k >= n || keep[k])
      throw std::invalid_argument("invalid subset");
    keep[k] = true;
  }
  std::vector<int> complement;
  for (int k = 0; k < n; ++k)
    if (!keep[k]) complement.push_back(k);

  ReducedInequality out;
  out.lhs = alternating_pmax(state, cfg).p_max;
  DensityOperator reduced = partial_trace(density_from_pure(state), complement);
  double reduced_pmax = alternating_pmax(reduced, cfg).p_max;
  out.rhs = std::ldexp(reduced_pmax, -(n - m - 1));
  out.slack = out.lhs - out.rhs;
  out.holds = out.slack >= -1e-9;
  return out;
}

struct MixednessReport {
  int order = 0;
  std::vector<std::vector<int>> subsets;
  std::vector<double> deviations;  // Frobenius distance to I/2^m per subset
  double max_deviation = 0.0;
  std::vector<int> worst_subset;
};

// Frobenius deviation of every m-qubit reduction from the completely mixed
// state I/2^m.
inline MixednessReport mixedness_report(const PureState& state, int order) {
  const int n = state.parties();
  for (int d : state.dims)
    if (d != 2) throw std::invalid_argument("mixedness report is qubit-only");
  if (order < 1 || order > n - 1)
    throw std::invalid_argument("order out of range");

  DensityOperator rho = density_from_pure(state);
  MixednessReport report;
  report.order = order;

  std::vector<int> subset;
  auto recurse = [&](auto&& self, int next) -> void {
    if (static_cast<int>(subset.size()) == order) {
      std::vector<int> complement;
      for (int k = 0; k < n; ++k)
        if (std::find(subset.begin(), subset.end(), k) == subset.end())
          complement.push_back(k);
      DensityOperator red = partial_trace(rho, complement);
      long d = red.total_dim();
      Matrix diff = red.mat - Matrix::Identity(d, d) / static_cast<double>(d);
      double dev = diff.norm();
      report.subsets.push_back(subset);
      report.deviations.push_back(dev);
      if (dev >= report.max_deviation) {
        if (dev > report.max_deviation || report.worst_subset.empty()) {
          report.max_deviation = dev;
          report.worst_subset = subset;
        }
      }
      return;
    }
    for (int k = next; k < n; ++k) {
      subset.push_back(k);
      self(self, k + 1);
      subset.pop_back();
    }
  };
  recurse(recurse, 0);
  return report;
}

struct PuritySearchConfig {
  std::uint64_t seed = 0;
  int restarts = 50;
  int steps = 500;
  double initial_step = 0.3;
};

struct PurityGapResult {
  double best_residual = 0.0;
  std::array<double, 27> best_g{};
  long iterations = 0;
  std::uint64_t seed = 0;
  std::vector<std::vector<double>> restart_trajectories;  // accepted residuals
};

namespace detail {

// The 27 products sigma^a (x) sigma^b (x) sigma^c, built once.
inline const std::vector<Matrix>& pauli_triples() {
  static const std::vector<Matrix> triples = [] {
    std::vector<Matrix> out;
    out.reserve(27);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          out.push_back(kron(kron(pauli(a), pauli(b)), pauli(c)));
        }
    return out;
  }();
  return triples;
}

inline Matrix rho_from_g(const std::array<double, 27>& g) {
  Matrix rho = Matrix::Identity(8, 8);
  const auto& triples = pauli_triples();
  for (int i = 0; i < 27; ++i) rho += g[i] * triples[i];
  return rho / 8.0;
}

inline double purity_residual(const std::array<double, 27>& g) {
  Matrix rho = rho_from_g(g);
  return (rho * rho - rho).norm();
}

inline void project_sphere(std::array<double, 27>& g) {
  double n2 = 0;
  for (double x : g) n2 += x * x;
  double scale = std::sqrt(7.0 / std::max(n2, 1e-300));
  for (double& x : g) x *= scale;
}

}  // namespace detail

// Minimizes ||rho(g)^2 - rho(g)||_F over real g with sum g^2 = 7 (necessary
// for tr rho^2 = 1) by seeded restarts and projected finite-difference
// descent. A floor bounded away from zero witnesses that no pure three-qubit
// state has all reductions completely mixed.
inline PurityGapResult three_qubit_purity_gap(const PuritySearchConfig& cfg = {}) {
  PurityGapResult result;
  result.seed = cfg.seed;
  result.best_residual = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    auto rng = detail::start_rng(cfg.seed, restart);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::array<double, 27> g{};
    for (double& x : g) x = gauss(rng);
    detail::project_sphere(g);

    double value = detail::purity_residual(g);
    std::vector<double> trajectory{value};
    double step = cfg.initial_step;
    const double h = 1e-5;

    for (int it = 0; it < cfg.steps; ++it) {
      ++result.iterations;
      std::array<double, 27> grad{};
      for (int i = 0; i < 27; ++i) {
        std::array<double, 27> gp = g, gm = g;
        gp[i] += h;
        gm[i] -= h;
        grad[i] = (detail::purity_residual(gp) - detail::purity_residual(gm)) /
                  (2.0 * h);
      }
      std::array<double, 27> cand = g;
      for (int i = 0; i < 27; ++i) cand[i] -= step * grad[i];
      detail::project_sphere(cand);
      double cand_value = detail::purity_residual(cand);
      if (cand_value < value) {
        g = cand;
        value = cand_value;
      } else {
        step *= 0.5;
        if (step < 1e-10) break;
      }
      trajectory.push_back(value);
    }

    if (value < result.best_residual) {
      result.best_residual = value;
      result.best_g = g;
    }
    result.restart_trajectories.push_back(std::move(trajectory));
  }
  return result;
}

}  // namespace groverian
