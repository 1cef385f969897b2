// SPDX-License-Identifier: Apache-2.0

#include "groverian/bounds.hpp"
#include "groverian/random_states.hpp"
#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace groverian;
using namespace groverian::testing;
using Catch::Approx;

TEST_CASE("lower bound values") {
  REQUIRE(lower_bound(1) == 1.0);
  REQUIRE(lower_bound(2) == 0.5);
  REQUIRE(lower_bound(3) == 0.25);
  REQUIRE_THROWS_AS(lower_bound(0), std::invalid_argument);
}

TEST_CASE("reduced inequality: Bell at m=1 is an equality") {
  auto r = check_reduced_inequality(bell_state(), {0});
  REQUIRE(r.lhs == Approx(0.5).margin(1e-9));
  REQUIRE(r.rhs == Approx(0.5).margin(1e-9));
  REQUIRE(r.holds);
}

TEST_CASE("reduced inequality: GHZ at m=2 is an equality") {
  auto r = check_reduced_inequality(ghz_state(), {0, 1});
  REQUIRE(r.lhs == Approx(0.5).margin(1e-9));
  REQUIRE(r.rhs == Approx(0.5).margin(1e-9));
  REQUIRE(r.holds);
}

TEST_CASE("reduced inequality: product state has slack 1/2") {
  auto r = check_reduced_inequality(basis_state({2, 2, 2}, 0), {0});
  REQUIRE(r.lhs == Approx(1.0).margin(1e-10));
  REQUIRE(r.rhs == Approx(0.5).margin(1e-10));
  REQUIRE(r.holds);
}

TEST_CASE("reduced inequality rejects bad subsets") {
  REQUIRE_THROWS_AS(check_reduced_inequality(ghz_state(), {}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(check_reduced_inequality(ghz_state(), {0, 1, 2}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(check_reduced_inequality(ghz_state(), {0, 0}),
                    std::invalid_argument);
}

TEST_CASE("reduced inequality holds on random states, all subsets") {
  SolverConfig cfg;
  for (int n : {3, 4}) {
    for (int sample = 0; sample < 8; ++sample) {
      auto rng = make_rng(307 + n, sample);
      auto psi = random_pure_state(std::vector<int>(n, 2), rng);
      for (int mask = 1; mask < (1 << n) - 1; ++mask) {
        std::vector<int> subset;
        for (int k = 0; k < n; ++k)
          if (mask & (1 << k)) subset.push_back(k);
        auto r = check_reduced_inequality(psi, subset, cfg);
        REQUIRE(r.slack >= -1e-9);
      }
    }
  }
}

TEST_CASE("mixedness: GHZ single-qubit reductions are completely mixed") {
  auto report = mixedness_report(ghz_state(), 1);
  REQUIRE(report.max_deviation == Approx(0.0).margin(1e-12));
  REQUIRE(report.subsets.size() == 3);
}

TEST_CASE("mixedness: GHZ two-qubit reductions deviate by 1/2") {
  auto report = mixedness_report(ghz_state(), 2);
  REQUIRE(report.max_deviation == Approx(0.5).margin(1e-12));
  for (double d : report.deviations) REQUIRE(d == Approx(0.5).margin(1e-12));
}

TEST_CASE("mixedness: product state single reductions deviate by 1/sqrt(2)") {
  auto report = mixedness_report(basis_state({2, 2, 2}, 0), 1);
  REQUIRE(report.max_deviation == Approx(1.0 / std::sqrt(2.0)).margin(1e-12));
}

TEST_CASE("mixedness rejects bad orders") {
  REQUIRE_THROWS_AS(mixedness_report(ghz_state(), 0), std::invalid_argument);
  REQUIRE_THROWS_AS(mixedness_report(ghz_state(), 3), std::invalid_argument);
}

TEST_CASE("no sampled 3-qubit state is mixed at both orders") {
  for (int sample = 0; sample < 30; ++sample) {
    auto rng = make_rng(311, sample);
    auto psi = random_pure_state({2, 2, 2}, rng);
    double d1 = mixedness_report(psi, 1).max_deviation;
    double d2 = mixedness_report(psi, 2).max_deviation;
    REQUIRE_FALSE((d1 < 1e-6 && d2 < 1e-6));
  }
}

TEST_CASE("purity residual baseline at g = 0") {
  std::array<double, 27> zero{};
  // rho = I/8, residual ||I/64 - I/8||_F = sqrt(8) * 7/64
  double expected = std::sqrt(8.0) * (1.0 / 8.0 - 1.0 / 64.0);
  REQUIRE(detail::purity_residual(zero) == Approx(expected).epsilon(1e-12));
}

TEST_CASE("purity-gap search: small run behaves") {
  PuritySearchConfig cfg;
  cfg.restarts = 4;
  cfg.steps = 60;
  cfg.seed = 3;
  auto result = three_qubit_purity_gap(cfg);
  REQUIRE(result.best_residual >= 0.0);
  REQUIRE(std::isfinite(result.best_residual));
  double n2 = 0;
  for (double x : result.best_g) n2 += x * x;
  REQUIRE(n2 == Approx(7.0).margin(1e-9));
  // accepted residuals are non-increasing within each restart
  for (const auto& traj : result.restart_trajectories)
    for (size_t i = 1; i < traj.size(); ++i)
      REQUIRE(traj[i] <= traj[i - 1] + 1e-15);
}

TEST_CASE("purity-gap search is deterministic for a fixed seed") {
  PuritySearchConfig cfg;
  cfg.restarts = 2;
  cfg.steps = 30;
  cfg.seed = 9;
  auto a = three_qubit_purity_gap(cfg);
  auto b = three_qubit_purity_gap(cfg);
  REQUIRE(a.best_residual == b.best_residual);
}
