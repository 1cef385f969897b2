// SPDX-License-Identifier: Apache-2.0
//
// Independent brute-force maximization over product-state angles. Each local
// qubit is cos(theta)|0> + e^{i phi} sin(theta)|1>; a coarse grid plus window
// refinement around the best cell gives a solver-independent lower bound on
// P_max. Kept deliberately dumb: no gradients, no eigen machinery.

#pragma once

#include "groverian/core.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace groverian {

struct GridConfig {
  int theta_steps = 60;
  int phi_steps = 30;     // forced to 1 when all amplitudes are real
  int refine_rounds = 3;  // each round shrinks the window 10x around the best
};

namespace detail {

struct AngleWindow {
  double theta_lo, theta_hi;
  double phi_lo, phi_hi;
};

struct GridCell {
  double theta, phi;
  Complex c0, c1;  // conj(<q|0>), conj(<q|1>) contraction weights
};

struct GridBest {
  double value = -1.0;
  std::vector<double> theta, phi;
};

// Per-party table of local-state contraction weights over the window.
inline std::vector<GridCell> cell_table(const AngleWindow& w, int theta_steps,
                                        int phi_steps) {
  std::vector<GridCell> cells;
  cells.reserve(static_cast<size_t>(theta_steps) * phi_steps);
  for (int it = 0; it < theta_steps; ++it) {
    double th = theta_steps == 1 ? 0.5 * (w.theta_lo + w.theta_hi)
                                 : w.theta_lo + (w.theta_hi - w.theta_lo) * it /
                                                    (theta_steps - 1);
    double ct = std::cos(th), st = std::sin(th);
    for (int ip = 0; ip < phi_steps; ++ip) {
      double ph = phi_steps == 1 ? 0.0
                                 : w.phi_lo +
                                       (w.phi_hi - w.phi_lo) * ip / (phi_steps - 1);
      cells.push_back({th, ph, Complex(ct, 0.0),
                       st * std::conj(std::polar(1.0, ph))});
    }
  }
  return cells;
}

// Depth-first scan: contract party `level` against every grid cell and
// recurse on the halved amplitude block. Buffers are stack-resident.
inline void grid_scan(const std::vector<std::vector<GridCell>>& tables,
                      int level, const Complex* amps, long len,
                      std::array<int, 4>& pick, GridBest& best) {
  if (level == static_cast<int>(tables.size())) {
    double v = std::norm(amps[0]);
    if (v > best.value) {
      best.value = v;
      for (size_t k = 0; k < tables.size(); ++k) {
        best.theta[k] = tables[k][pick[k]].theta;
        best.phi[k] = tables[k][pick[k]].phi;
      }
    }
    return;
  }
  const long half = len / 2;
  std::array<Complex, 8> buf;
  const auto& cells = tables[level];
  for (size_t c = 0; c < cells.size(); ++c) {
    const GridCell& cell = cells[c];
    for (long i = 0; i < half; ++i)
      buf[i] = cell.c0 * amps[i] + cell.c1 * amps[half + i];
    pick[level] = static_cast<int>(c);
    grid_scan(tables, level + 1, buf.data(), half, pick, best);
  }
}

inline double eval_angles(const PureState& psi, const std::vector<double>& theta,
                          const std::vector<double>& phi) {
  Vector partial = psi.amps;
  for (int k = 0; k < psi.parties(); ++k) {
    long half = partial.size() / 2;
    double ct = std::cos(theta[k]), st = std::sin(theta[k]);
    Complex e = std::polar(1.0, phi[k]);
    Vector next(half);
    for (long i = 0; i < half; ++i)
      next(i) = ct * partial(i) + std::conj(e) * st * partial(half + i);
    partial = std::move(next);
  }
  return std::norm(partial(0));
}

}  // namespace detail

inline double grid_pmax(const PureState& state, const GridConfig& cfg = {}) {
  const int n = state.parties();
  if (n > 4) throw std::invalid_argument("grid oracle supports up to 4 parties");
  for (int d : state.dims)
    if (d != 2) throw std::invalid_argument("grid oracle is qubit-only");
  if (cfg.theta_steps < 2) throw std::invalid_argument("theta_steps must be >= 2");
  if (cfg.phi_steps < 1) throw std::invalid_argument("phi_steps must be >= 1");

  PureState psi = normalize(state);

  bool real_amps = true;
  for (long i = 0; i < psi.amps.size(); ++i)
    if (std::abs(psi.amps(i).imag()) > 1e-14) real_amps = false;
  const int phi_steps = real_amps ? 1 : cfg.phi_steps;

  constexpr double pi = std::numbers::pi;
  std::vector<detail::AngleWindow> win(n, {0.0, pi, 0.0, 2.0 * pi});

  detail::GridBest best;
  best.theta.assign(n, 0.0);
  best.phi.assign(n, 0.0);
  for (int round = 0; round <= cfg.refine_rounds; ++round) {
    detail::GridBest round_best;
    round_best.theta.assign(n, 0.0);
    round_best.phi.assign(n, 0.0);
    std::vector<std::vector<detail::GridCell>> tables;
    for (int k = 0; k < n; ++k)
      tables.push_back(detail::cell_table(win[k], cfg.theta_steps, phi_steps));
    std::array<int, 4> pick{};
    detail::grid_scan(tables, 0, psi.amps.data(), psi.amps.size(), pick,
                      round_best);
    if (round_best.value > best.value) best = round_best;
    // shrink each window 10x around the best angles, clamped to the domain
    for (int k = 0; k < n; ++k) {
      double tw = (win[k].theta_hi - win[k].theta_lo) / 10.0;
      double pw = (win[k].phi_hi - win[k].phi_lo) / 10.0;
      double tc = best.theta[k], pc = best.phi[k];
      win[k].theta_lo = std::max(0.0, tc - tw / 2.0);
      win[k].theta_hi = std::min(pi, tc + tw / 2.0);
      win[k].phi_lo = std::max(0.0, pc - pw / 2.0);
      win[k].phi_hi = std::min(2.0 * pi, pc + pw / 2.0);
    }
  }
  // the running best is merged across rounds, so refinement never loses
  // ground; re-evaluating it guards against clamping edge cases
  best.value = std::max(best.value, detail::eval_angles(psi, best.theta, best.phi));
  return best.value;
}

}  // namespace groverian
