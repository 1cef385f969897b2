// SPDX-License-Identifier: Apache-2.0

#include "groverian/closed_form.hpp"
#include "groverian/oracle.hpp"
#include "groverian/random_states.hpp"
#include "groverian/solver.hpp"
#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace groverian;
using namespace groverian::testing;
using Catch::Approx;

TEST_CASE("oracle anchors") {
  REQUIRE(grid_pmax(bell_state()) == Approx(0.5).margin(1e-6));
  REQUIRE(grid_pmax(basis_state({2, 2, 2}, 0)) == Approx(1.0).margin(1e-9));
  REQUIRE(grid_pmax(w3_state(1.0)) == Approx(4.0 / 9.0).margin(1e-6));
}

TEST_CASE("oracle rejects unsupported inputs") {
  REQUIRE_THROWS_AS(grid_pmax(basis_state({2, 2, 2, 2, 2}, 0)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(grid_pmax(basis_state({3, 2}, 0)), std::invalid_argument);
}

namespace {

PureState random_real_state(const std::vector<int>& dims,
                            std::mt19937_64& rng) {
  PureState psi = random_pure_state(dims, rng);
  for (long i = 0; i < psi.amps.size(); ++i)
    psi.amps(i) = Complex(psi.amps(i).real() + psi.amps(i).imag(), 0.0);
  return normalize(psi);
}

}  // namespace

TEST_CASE("grid value never exceeds the solver value") {
  SolverConfig cfg;
  for (int sample = 0; sample < 15; ++sample) {
    auto rng = make_rng(211, sample);
    auto psi = random_real_state({2, 2, 2}, rng);
    REQUIRE(grid_pmax(psi) <= alternating_pmax(psi, cfg).p_max + 1e-9);
  }
  // full-phase path on complex states: coarse grid keeps the cost sane
  GridConfig coarse;
  coarse.theta_steps = 10;
  coarse.phi_steps = 8;
  for (int sample = 0; sample < 3; ++sample) {
    auto rng = make_rng(213, sample);
    auto psi = random_pure_state({2, 2, 2}, rng);
    REQUIRE(grid_pmax(psi, coarse) <= alternating_pmax(psi, cfg).p_max + 1e-9);
  }
}

TEST_CASE("more refinement rounds never lose ground") {
  auto rng = make_rng(223, 0);
  auto psi = random_real_state({2, 2, 2}, rng);
  double prev = -1.0;
  for (int rounds = 0; rounds <= 4; ++rounds) {
    GridConfig cfg;
    cfg.refine_rounds = rounds;
    double v = grid_pmax(psi, cfg);
    REQUIRE(v >= prev);
    prev = v;
  }
}

TEST_CASE("real fast path agrees with the full-phase scan") {
  // a negligible imaginary nudge disables the fast path and forces the full
  // phi scan on what is numerically the same state
  for (int sample = 0; sample < 3; ++sample) {
    auto rng = make_rng(227, sample);
    PureState psi = random_real_state({2, 2}, rng);
    double fast = grid_pmax(psi);
    PureState nudged = psi;
    nudged.amps(0) += Complex(0.0, 1e-13);
    nudged = normalize(nudged);
    GridConfig cfg;
    cfg.theta_steps = 40;
    cfg.phi_steps = 16;
    double full = grid_pmax(nudged, cfg);
    REQUIRE(fast == Approx(full).margin(1e-6));
  }
}

TEST_CASE("refinement reaches 1e-6 on smooth instances") {
  REQUIRE(grid_pmax(w3_state(0.9)) == Approx(w3_pmax(0.9).p_max).margin(1e-6));
  REQUIRE(grid_pmax(w4_state(1.1)) == Approx(w4_pmax(1.1).p_max).margin(1e-6));
}
