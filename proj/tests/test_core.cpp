// SPDX-License-Identifier: Apache-2.0

#include "groverian/core.hpp"
#include "groverian/io.hpp"
#include "groverian/random_states.hpp"
#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace groverian;
using namespace groverian::testing;
using Catch::Approx;

TEST_CASE("normalize scales uniformly") {
  PureState psi;
  psi.dims = {3};
  psi.amps = Vector::Ones(3);
  auto out = normalize(psi);
  for (int i = 0; i < 3; ++i)
    REQUIRE(out.amps(i).real() == Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("normalize builds the kappa=1 W state") {
  PureState psi;
  psi.dims = {2, 2, 2};
  psi.amps = Vector::Zero(8);
  psi.amps(4) = 1.0;
  psi.amps(2) = 1.0;
  psi.amps(1) = 1.0;
  auto out = normalize(psi);
  REQUIRE(std::abs(out.amps(4)) == Approx(1.0 / std::sqrt(3.0)));
  REQUIRE(std::abs(out.amps(2)) == Approx(1.0 / std::sqrt(3.0)));
  REQUIRE(std::abs(out.amps(1)) == Approx(1.0 / std::sqrt(3.0)));
  REQUIRE(out.amps.squaredNorm() == Approx(1.0).margin(1e-12));
}

TEST_CASE("normalize rejects the null state") {
  PureState psi;
  psi.dims = {2};
  psi.amps = Vector::Zero(2);
  REQUIRE_THROWS_AS(normalize(psi), std::invalid_argument);
}

TEST_CASE("density_from_pure basis projector") {
  auto rho = density_from_pure(basis_state({2}, 0));
  REQUIRE(rho.mat(0, 0).real() == Approx(1.0));
  REQUIRE(std::abs(rho.mat(0, 1)) == Approx(0.0).margin(1e-15));
  REQUIRE(std::abs(rho.mat(1, 1)) == Approx(0.0).margin(1e-15));
}

TEST_CASE("density_from_pure Bell corners") {
  auto rho = density_from_pure(bell_state());
  for (auto [i, j] : {std::pair{0, 0}, {0, 3}, {3, 0}, {3, 3}})
    REQUIRE(rho.mat(i, j).real() == Approx(0.5));
  REQUIRE(std::abs(rho.mat(1, 1)) == Approx(0.0).margin(1e-15));
}

TEST_CASE("density_from_pure rejects unnormalized input") {
  PureState psi;
  psi.dims = {2};
  psi.amps = Vector::Ones(2);  // norm sqrt(2)
  REQUIRE_THROWS_AS(density_from_pure(psi), std::invalid_argument);
}

TEST_CASE("partial trace of Bell is maximally mixed") {
  auto red = partial_trace(density_from_pure(bell_state()), {1});
  REQUIRE(red.mat(0, 0).real() == Approx(0.5));
  REQUIRE(red.mat(1, 1).real() == Approx(0.5));
  REQUIRE(std::abs(red.mat(0, 1)) == Approx(0.0).margin(1e-15));
}

TEST_CASE("partial trace of GHZ over party 3") {
  auto red = partial_trace(density_from_pure(ghz_state()), {2});
  REQUIRE(red.mat(0, 0).real() == Approx(0.5));
  REQUIRE(red.mat(3, 3).real() == Approx(0.5));
  REQUIRE(std::abs(red.mat(0, 3)) == Approx(0.0).margin(1e-15));
  REQUIRE(std::abs(red.mat(1, 1)) == Approx(0.0).margin(1e-15));
}

TEST_CASE("partial trace of a product state") {
  auto red = partial_trace(density_from_pure(basis_state({2, 2}, 1)), {0});
  REQUIRE(red.mat(1, 1).real() == Approx(1.0));
  REQUIRE(std::abs(red.mat(0, 0)) == Approx(0.0).margin(1e-15));
}

TEST_CASE("tracing out every party is an error") {
  auto rho = density_from_pure(bell_state());
  REQUIRE_THROWS_AS(partial_trace(rho, {0, 1}), std::invalid_argument);
}

TEST_CASE("overlap_with_product examples") {
  ProductAssignment zz;
  zz.locals = {Vector::Unit(2, 0), Vector::Unit(2, 0)};
  auto rho00 = density_from_pure(basis_state({2, 2}, 0));
  REQUIRE(overlap_with_product(rho00, zz) == Approx(1.0));

  auto bell = density_from_pure(bell_state());
  REQUIRE(overlap_with_product(bell, zz) == Approx(0.5));

  ProductAssignment zo;
  zo.locals = {Vector::Unit(2, 0), Vector::Unit(2, 1)};
  REQUIRE(overlap_with_product(bell, zo) == Approx(0.0).margin(1e-15));
}

TEST_CASE("overlap rejects dimension mismatch") {
  ProductAssignment bad;
  bad.locals = {Vector::Unit(3, 0), Vector::Unit(2, 0)};
  REQUIRE_THROWS_AS(
      overlap_with_product(density_from_pure(bell_state()), bad),
      std::invalid_argument);
}

TEST_CASE("correlation tensor of I/2 vanishes") {
  DensityOperator rho;
  rho.dims = {2};
  rho.mat = Matrix::Identity(2, 2) / 2.0;
  auto g = correlation_tensor(rho, 1);
  for (double e : g.entries) REQUIRE(e == Approx(0.0).margin(1e-12));
}

TEST_CASE("correlation tensor of Bell is diag(+1,-1,+1)") {
  auto g = correlation_tensor(density_from_pure(bell_state()), 2);
  REQUIRE(g.at({0, 0}) == Approx(1.0));
  REQUIRE(g.at({1, 1}) == Approx(-1.0));
  REQUIRE(g.at({2, 2}) == Approx(1.0));
  REQUIRE(g.at({0, 1}) == Approx(0.0).margin(1e-12));
  REQUIRE(g.at({0, 2}) == Approx(0.0).margin(1e-12));
}

TEST_CASE("correlation tensor of GHZ single-qubit reduction vanishes") {
  auto red = partial_trace(density_from_pure(ghz_state()), {1, 2});
  auto g = correlation_tensor(red, 1);
  for (double e : g.entries) REQUIRE(e == Approx(0.0).margin(1e-12));
}

TEST_CASE("correlation tensor rejects qudits") {
  DensityOperator rho;
  rho.dims = {3};
  rho.mat = Matrix::Identity(3, 3) / 3.0;
  REQUIRE_THROWS_AS(correlation_tensor(rho, 1), std::invalid_argument);
}

TEST_CASE("partial trace preserves trace, Hermiticity and PSD") {
  for (int sample = 0; sample < 200; ++sample) {
    auto rng = make_rng(42, sample);
    std::vector<int> dims = sample % 2 ? std::vector<int>{2, 2, 2}
                                       : std::vector<int>{2, 3, 2};
    auto rho = density_from_pure(random_pure_state(dims, rng));
    auto red = partial_trace(rho, {static_cast<int>(sample % 3)});
    REQUIRE(std::abs(red.mat.trace().real() - 1.0) < 1e-12);
    double min_eig = 0;
    REQUIRE(check_density_invariants(red, &min_eig));
    REQUIRE(min_eig >= -1e-10);
  }
}

TEST_CASE("reduced expectations are consistent with the joint state") {
  for (int sample = 0; sample < 25; ++sample) {
    auto rng = make_rng(7, sample);
    auto rho = density_from_pure(random_pure_state({2, 2}, rng));
    // random Hermitian X on party 1
    Matrix z(2, 2);
    std::normal_distribution<double> gauss;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
    Matrix x = 0.5 * (z + z.adjoint().eval());
    Matrix xi = detail::kron(x, Matrix::Identity(2, 2));
    auto red = partial_trace(rho, {1});
    Complex lhs = (rho.mat * xi).trace();
    Complex rhs = (red.mat * x).trace();
    REQUIRE(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("sequential and joint tracing agree") {
  for (int sample = 0; sample < 20; ++sample) {
    auto rng = make_rng(11, sample);
    auto rho = density_from_pure(random_pure_state({2, 2, 2}, rng));
    auto joint = partial_trace(rho, {0, 1});
    auto seq = partial_trace(partial_trace(rho, {0}), {0});
    REQUIRE((joint.mat - seq.mat).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("m=1 correlation vector reconstructs the density matrix") {
  for (int sample = 0; sample < 20; ++sample) {
    auto rng = make_rng(13, sample);
    auto rho = partial_trace(density_from_pure(random_pure_state({2, 2}, rng)),
                             {1});
    auto g = correlation_tensor(rho, 1);
    Matrix rebuilt = Matrix::Identity(2, 2);
    for (int a = 0; a < 3; ++a) rebuilt += g.entries[a] * detail::pauli(a);
    rebuilt /= 2.0;
    REQUIRE((rebuilt - rho.mat).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("state JSON round trip keeps 1e-15 relative precision") {
  for (int sample = 0; sample < 10; ++sample) {
    auto rng = make_rng(17, sample);
    auto psi = random_pure_state({2, 2, 3}, rng);
    auto back = state_from_json(state_to_json(psi));
    REQUIRE(back.dims == psi.dims);
    for (long i = 0; i < psi.amps.size(); ++i)
      REQUIRE(std::abs(back.amps(i) - psi.amps(i)) <=
              1e-15 * std::max(1.0, std::abs(psi.amps(i))));
  }
}

TEST_CASE("malformed state JSON is rejected") {
  REQUIRE_THROWS_AS(state_from_json(nlohmann::json{{"dims", {2, 2}}}),
                    std::invalid_argument);
  nlohmann::json bad{{"dims", {2, 2}}, {"amps", {{1.0, 0.0}}}};
  REQUIRE_THROWS_AS(state_from_json(bad), std::invalid_argument);
}
