// SPDX-License-Identifier: Apache-2.0
//
// Seeded random pure states and Haar-like local unitaries for property
// checks. Unitaries come from QR-orthonormalized complex Gaussian matrices.

#pragma once

#include "groverian/core.hpp"

#include <cstdint>
#include <random>

namespace groverian {

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint64_t>(0x517cc1b727220a95ULL), seed,
                    stream};
  return std::mt19937_64(seq);
}

inline PureState random_pure_state(const std::vector<int>& dims,
                                   std::mt19937_64& rng) {
  PureState psi;
  psi.dims = dims;
  long dim = 1;
  for (int d : dims) dim *= d;
  psi.amps = Vector(dim);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (long i = 0; i < dim; ++i) psi.amps(i) = Complex(gauss(rng), gauss(rng));
  return normalize(psi);
}

inline Matrix random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix column phases so the factorization is unique
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    double a = std::abs(d);
    if (a > 1e-300) q.col(j) *= d / a;
  }
  return q;
}

// (U_1 (x) ... (x) U_n) |psi> for single-party unitaries.
inline PureState apply_local_unitaries(const PureState& state,
                                       const std::vector<Matrix>& units) {
  if (units.size() != state.dims.size())
    throw std::invalid_argument("one unitary per party required");
  PureState out = state;
  const auto s = detail::strides(state.dims);
  const long dim = state.total_dim();
  for (int k = 0; k < state.parties(); ++k) {
    const Matrix& u = units[k];
    if (u.rows() != state.dims[k] || u.cols() != state.dims[k])
      throw std::invalid_argument("unitary dimension mismatch");
    Vector next = Vector::Zero(dim);
    for (long i = 0; i < dim; ++i) {
      int a = detail::digit(i, s, state.dims, k);
      long base = i - a * s[k];
      for (int b = 0; b < state.dims[k]; ++b)
        next(base + b * s[k]) += u(b, a) * out.amps(i);
    }
    out.amps = std::move(next);
  }
  return out;
}

}  // namespace groverian
