// SPDX-License-Identifier: Apache-2.0
//
// Maximal success probability P_max by alternating local updates. Each site
// update is a linear eigenproblem on an effective local matrix; the pure-state
// path contracts the state directly, the reduced path maximizes over the
// once-reduced mixed state.

#pragma once

#include "groverian/core.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace groverian {

enum class Method { Direct, Reduced, Auto };

struct SolverConfig {
  double tol = 1e-12;      // convergence threshold on successive overlap change
  int max_iter = 1000;     // full site cycles per start
  int starts = 24;
  std::uint64_t seed = 0;
  Method method = Method::Auto;
};

struct PmaxReport {
  double p_max = 0.0;
  double groverian = 0.0;
  ProductAssignment best_assignment;
  bool converged = false;
  int iterations_used = 0;
  std::vector<double> per_start_values;
  std::vector<std::vector<double>> trajectories;  // post-update overlaps per start
  bool not_a_measure = false;  // set for genuinely mixed inputs
};

inline double groverian_measure(double p_max) {
  if (!(p_max > 0.0) || p_max > 1.0 + 1e-12)
    throw std::invalid_argument("p_max must lie in (0, 1]");
  return std::sqrt(std::max(0.0, 1.0 - p_max));
}

namespace detail {

// Fix the overall phase so the first nonzero component is real positive.
inline void fix_phase(Vector& v) {
  for (long i = 0; i < v.size(); ++i) {
    double a = std::abs(v(i));
    if (a > 1e-12) {
      v *= std::conj(v(i)) / a;
      break;
    }
  }
}

}  // namespace detail

// Largest eigenvalue and a unit eigenvector of a Hermitian matrix.
// 2x2 inputs use the radical form 1/2 (tr A + sqrt((tr A)^2 - 4 det A)).
inline std::pair<double, Vector> top_eigen_hermitian(const Matrix& a) {
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > kHermTol * scale)
    throw std::invalid_argument("matrix is not Hermitian");

  if (a.rows() == 2) {
    double tr = a.trace().real();
    double det = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)).real();
    double disc = std::max(0.0, tr * tr - 4.0 * det);
    double lambda = 0.5 * (tr + std::sqrt(disc));
    Vector v(2);
    if (std::abs(a(0, 1)) > 1e-14 * scale) {
      v << a(0, 1), Complex(lambda) - a(0, 0);
    } else {
      // effectively diagonal
      if (a(0, 0).real() >= a(1, 1).real())
        v << 1, 0;
      else
        v << 0, 1;
    }
    double nrm = v.norm();
    if (nrm < 1e-300)
      v << 1, 0;
    else
      v /= nrm;
    detail::fix_phase(v);
    return {lambda, v};
  }

  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  long last = a.rows() - 1;
  Vector v = es.eigenvectors().col(last);
  detail::fix_phase(v);
  return {es.eigenvalues()(last), v};
}

// M = tr_{j != k}(rho (x)_{j != k} |q_j><q_j| (x) I_k); a d_k x d_k Hermitian
// PSD matrix with tr(M rho_k) equal to the product overlap for any rho_k.
inline Matrix effective_local_matrix(const DensityOperator& rho,
                                     const ProductAssignment& assignment,
                                     int site) {
  const int n = rho.parties();
  if (site < 0 || site >= n) throw std::invalid_argument("site out of range");
  for (int j = 0; j < n; ++j) {
    if (j == site) continue;
    if (assignment.locals[j].size() != rho.dims[j])
      throw std::invalid_argument("assignment local dimension mismatch");
  }
  const auto s = detail::strides(rho.dims);
  const long dim = rho.total_dim();
  const int dk = rho.dims[site];

  // w_i = prod_{j != k} q_j[i_j], with the site factor left out.
  std::vector<Complex> w(dim);
  for (long i = 0; i < dim; ++i) {
    Complex prod = 1;
    for (int j = 0; j < n; ++j) {
      if (j == site) continue;
      prod *= assignment.locals[j](detail::digit(i, s, rho.dims, j));
    }
    w[i] = prod;
  }

  Matrix m = Matrix::Zero(dk, dk);
  for (long i = 0; i < dim; ++i) {
    if (w[i] == Complex(0, 0)) continue;
    int a = detail::digit(i, s, rho.dims, site);
    for (long j = 0; j < dim; ++j) {
      if (w[j] == Complex(0, 0)) continue;
      int b = detail::digit(j, s, rho.dims, site);
      m(a, b) += std::conj(w[i]) * rho.mat(i, j) * w[j];
    }
  }
  // symmetrize away floating-point drift
  m = 0.5 * (m + m.adjoint().eval());
  return m;
}

namespace detail {

inline std::mt19937_64 start_rng(std::uint64_t seed, int start_index) {
  std::seed_seq seq{static_cast<std::uint64_t>(0x9e3779b97f4a7c15ULL), seed,
                    static_cast<std::uint64_t>(start_index)};
  return std::mt19937_64(seq);
}

inline Vector random_local(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  double nrm = v.norm();
  if (nrm < 1e-12) {
    v.setZero();
    v(0) = 1;
  } else {
    v /= nrm;
  }
  return v;
}

// Start list: computational-basis product assignments first (truncated to
// `starts`), the remainder filled with seeded random assignments.
inline std::vector<ProductAssignment> make_starts(const std::vector<int>& dims,
                                                  const SolverConfig& cfg) {
  long basis_count = 1;
  for (int d : dims) {
    basis_count *= d;
    if (basis_count > cfg.starts) {
      basis_count = cfg.starts;
      break;
    }
  }
  std::vector<ProductAssignment> out;
  for (long b = 0; b < basis_count && static_cast<int>(out.size()) < cfg.starts;
       ++b) {
    ProductAssignment pa;
    long rem = b;
    std::vector<int> digits(dims.size());
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
      digits[k] = static_cast<int>(rem % dims[k]);
      rem /= dims[k];
    }
    for (size_t k = 0; k < dims.size(); ++k) {
      Vector v = Vector::Zero(dims[k]);
      v(digits[k]) = 1;
      pa.locals.push_back(v);
    }
    out.push_back(std::move(pa));
  }
  for (int sidx = static_cast<int>(out.size()); sidx < cfg.starts; ++sidx) {
    auto rng = start_rng(cfg.seed, sidx);
    ProductAssignment pa;
    for (int d : dims) pa.locals.push_back(random_local(d, rng));
    out.push_back(std::move(pa));
  }
  return out;
}

struct StartOutcome {
  double value = 0.0;
  ProductAssignment assignment;
  bool converged = false;
  int iterations = 0;
  std::vector<double> trajectory;
};

// One alternating-ascent run on a mixed input from a given start.
inline StartOutcome run_start_mixed(const DensityOperator& rho,
                                    ProductAssignment pa,
                                    const SolverConfig& cfg) {
  StartOutcome out;
  const int n = rho.parties();
  double prev = overlap_with_product(rho, pa);
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    double current = prev;
    for (int k = 0; k < n; ++k) {
      Matrix m = effective_local_matrix(rho, pa, k);
      auto [lambda, vec] = top_eigen_hermitian(m);
      pa.locals[k] = vec;
      current = lambda;
      out.trajectory.push_back(current);
    }
    out.iterations = iter;
    if (std::abs(current - prev) < cfg.tol) {
      out.converged = true;
      prev = current;
      break;
    }
    prev = current;
  }
  out.value = prev;
  out.assignment = std::move(pa);
  return out;
}

// Pure-state path: chi = <q_1..q_k-hat..q_n | psi>, update q_k = chi/|chi|,
// overlap becomes <chi|chi>.
inline StartOutcome run_start_pure(const PureState& psi, ProductAssignment pa,
                                   const SolverConfig& cfg) {
  StartOutcome out;
  const int n = psi.parties();
  const auto s = detail::strides(psi.dims);
  const long dim = psi.total_dim();

  auto chi_at = [&](int site) {
    Vector chi = Vector::Zero(psi.dims[site]);
    for (long i = 0; i < dim; ++i) {
      Complex prod = psi.amps(i);
      if (prod == Complex(0, 0)) continue;
      for (int j = 0; j < n; ++j) {
        if (j == site) continue;
        prod *= std::conj(pa.locals[j](digit(i, s, psi.dims, j)));
      }
      chi(digit(i, s, psi.dims, site)) += prod;
    }
    return chi;
  };

  auto overlap_now = [&]() {
    Complex acc = 0;
    for (long i = 0; i < dim; ++i) {
      Complex prod = psi.amps(i);
      for (int j = 0; j < n; ++j)
        prod *= std::conj(pa.locals[j](digit(i, s, psi.dims, j)));
      acc += prod;
    }
    return std::norm(acc);
  };

  double prev = overlap_now();
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    double current = prev;
    for (int k = 0; k < n; ++k) {
      Vector chi = chi_at(k);
      double nrm2 = chi.squaredNorm();
      if (nrm2 > 1e-30) {
        Vector v = chi / std::sqrt(nrm2);
        fix_phase(v);
        pa.locals[k] = v;
        current = nrm2;
      }
      out.trajectory.push_back(current);
    }
    out.iterations = iter;
    if (std::abs(current - prev) < cfg.tol) {
      out.converged = true;
      prev = current;
      break;
    }
    prev = current;
  }
  out.value = prev;
  out.assignment = std::move(pa);
  return out;
}

template <typename RunStart>
PmaxReport fold_starts(const std::vector<int>& dims, const SolverConfig& cfg,
                       RunStart&& run) {
  if (!(cfg.tol > 0) || cfg.starts < 1 || cfg.max_iter < 1)
    throw std::invalid_argument("invalid solver configuration");
  auto starts = make_starts(dims, cfg);
  PmaxReport report;
  report.p_max = -1;
  for (size_t i = 0; i < starts.size(); ++i) {
    StartOutcome o = run(starts[i]);
    report.per_start_values.push_back(o.value);
    report.trajectories.push_back(std::move(o.trajectory));
    // ties keep the lowest start index
    if (o.value > report.p_max + cfg.tol) {
      report.p_max = o.value;
      report.best_assignment = std::move(o.assignment);
      report.converged = o.converged;
      report.iterations_used = o.iterations;
    }
  }
  report.p_max = std::min(report.p_max, 1.0);
  report.groverian = groverian_measure(report.p_max);
  return report;
}

}  // namespace detail

inline PmaxReport alternating_pmax(const PureState& state,
                                   const SolverConfig& cfg = {}) {
  if (!is_normalized(state))
    throw std::invalid_argument("alternating_pmax requires a normalized state");
  return detail::fold_starts(state.dims, cfg, [&](const ProductAssignment& pa) {
    return detail::run_start_pure(state, pa, cfg);
  });
}

inline PmaxReport alternating_pmax(const DensityOperator& rho,
                                   const SolverConfig& cfg = {}) {
  if (std::abs(rho.mat.trace().real() - 1.0) > 1e-9)
    throw std::invalid_argument("alternating_pmax requires a unit-trace operator");
  PmaxReport report =
      detail::fold_starts(rho.dims, cfg, [&](const ProductAssignment& pa) {
        return detail::run_start_mixed(rho, pa, cfg);
      });
  double purity = (rho.mat * rho.mat).trace().real();
  report.not_a_measure = purity < 1.0 - 1e-10;
  return report;
}

// Theorem-1 path: trace out one party and maximize the reduced mixed state.
// The result is still the pure state's P_max, so the measure flag is cleared.
inline PmaxReport pmax_via_reduced(const PureState& state, int site,
                                   const SolverConfig& cfg = {}) {
  if (state.parties() < 2)
    throw std::invalid_argument("reduced path needs at least two parties");
  DensityOperator reduced = partial_trace(density_from_pure(state), {site});
  PmaxReport report = alternating_pmax(reduced, cfg);
  report.not_a_measure = false;
  return report;
}

}  // namespace groverian
