// SPDX-License-Identifier: Apache-2.0
//
// Dense representations of pure multi-qudit states and density operators,
// partial trace, product-state overlaps and Pauli correlation tensors.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace groverian {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

constexpr double kNormTol = 1e-12;
constexpr double kHermTol = 1e-10;
constexpr double kPsdTol = -1e-10;

// Pure state over n parties with local dimensions dims[k] >= 2.
// Basis index: party 1 most significant, i = i1*(d2*...*dn) + ... + in,
// matching ket order |i1 i2 ... in>.
struct PureState {
  std::vector<int> dims;
  Vector amps;

  int parties() const { return static_cast<int>(dims.size()); }
  long total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), 1L,
                           [](long a, int d) { return a * d; });
  }
};

// Hermitian unit-trace PSD matrix over a subset of parties.
struct DensityOperator {
  std::vector<int> dims;
  Matrix mat;

  int parties() const { return static_cast<int>(dims.size()); }
  long total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), 1L,
                           [](long a, int d) { return a * d; });
  }
};

// One normalized local vector per party; a candidate closest product state.
struct ProductAssignment {
  std::vector<Vector> locals;

  int parties() const { return static_cast<int>(locals.size()); }
};

// Real order-m tensor of Pauli expectation values, qubit-only.
// Entry index: 3^(m-1)*a1 + ... + a_m with a in {0,1,2} ~ {x,y,z}.
struct CorrelationTensor {
  int order = 0;
  std::vector<double> entries;  // 3^order values

  double at(const std::vector<int>& alpha) const {
    long idx = 0;
    for (int a : alpha) idx = idx * 3 + a;
    return entries[idx];
  }
};

namespace detail {

inline void require_dims(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("state needs at least one party");
  for (int d : dims)
    if (d < 2) throw std::invalid_argument("local dimension must be >= 2");
}

// Mixed-radix strides, party 1 most significant.
inline std::vector<long> strides(const std::vector<int>& dims) {
  std::vector<long> s(dims.size());
  long acc = 1;
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    s[k] = acc;
    acc *= dims[k];
  }
  return s;
}

inline int digit(long index, const std::vector<long>& s,
                 const std::vector<int>& dims, int party) {
  return static_cast<int>((index / s[party]) % dims[party]);
}

inline bool is_hermitian(const Matrix& m, double tol = kHermTol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace detail

inline PureState normalize(const PureState& state) {
  detail::require_dims(state.dims);
  double nrm = state.amps.norm();
  if (nrm < 1e-300) throw std::invalid_argument("null state");
  PureState out = state;
  out.amps /= nrm;
  return out;
}

inline bool is_normalized(const PureState& state, double tol = kNormTol) {
  return std::abs(state.amps.squaredNorm() - 1.0) <= tol;
}

inline DensityOperator density_from_pure(const PureState& state) {
  detail::require_dims(state.dims);
  if (!is_normalized(state))
    throw std::invalid_argument("density_from_pure requires a normalized state");
  DensityOperator rho;
  rho.dims = state.dims;
  rho.mat = state.amps * state.amps.adjoint();
  return rho;
}

// Partial trace over the parties in traced_parties (0-based indices).
// Tracing all parties is an error; the retained parties keep their order.
inline DensityOperator partial_trace(const DensityOperator& rho,
                                     const std::vector<int>& traced_parties) {
  const int n = rho.parties();
  std::vector<bool> traced(n, false);
  for (int k : traced_parties) {
    if (k < 0 || k >= n) throw std::invalid_argument("traced party out of range");
    traced[k] = true;
  }
  std::vector<int> retained;
  for (int k = 0; k < n; ++k)
    if (!traced[k]) retained.push_back(k);
  if (retained.empty())
    throw std::invalid_argument("cannot trace out every party");
  if (retained.size() == static_cast<size_t>(n)) {
    return rho;  // nothing traced
  }

  const auto s = detail::strides(rho.dims);
  std::vector<int> rdims, tdims;
  std::vector<long> rstride, tstride;
  for (int k = 0; k < n; ++k) {
    if (traced[k]) {
      tdims.push_back(rho.dims[k]);
      tstride.push_back(s[k]);
    } else {
      rdims.push_back(rho.dims[k]);
      rstride.push_back(s[k]);
    }
  }
  long rdim = 1, tdim = 1;
  for (int d : rdims) rdim *= d;
  for (int d : tdims) tdim *= d;

  // Flat retained/traced index -> offset into the full space.
  auto offset = [](long idx, const std::vector<int>& dims,
                   const std::vector<long>& stride) {
    long off = 0;
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
      off += (idx % dims[k]) * stride[k];
      idx /= dims[k];
    }
    return off;
  };

  std::vector<long> roff(rdim), toff(tdim);
  for (long i = 0; i < rdim; ++i) roff[i] = offset(i, rdims, rstride);
  for (long t = 0; t < tdim; ++t) toff[t] = offset(t, tdims, tstride);

  DensityOperator out;
  out.dims = rdims;
  out.mat = Matrix::Zero(rdim, rdim);
  for (long i = 0; i < rdim; ++i)
    for (long j = 0; j < rdim; ++j) {
      Complex acc = 0;
      for (long t = 0; t < tdim; ++t)
        acc += rho.mat(roff[i] + toff[t], roff[j] + toff[t]);
      out.mat(i, j) = acc;
    }
  return out;
}

// Full product vector of an assignment, party 1 most significant.
inline Vector product_vector(const ProductAssignment& assignment) {
  Vector v = Vector::Ones(1);
  for (const auto& q : assignment.locals) {
    Vector next(v.size() * q.size());
    for (long i = 0; i < v.size(); ++i)
      for (long a = 0; a < q.size(); ++a) next(i * q.size() + a) = v(i) * q(a);
    v = std::move(next);
  }
  return v;
}

// tr(rho q1..qn><q1..qn|), the success probability of a product candidate.
inline double overlap_with_product(const DensityOperator& rho,
                                   const ProductAssignment& assignment) {
  if (assignment.parties() != rho.parties())
    throw std::invalid_argument("assignment/operator party count mismatch");
  for (int k = 0; k < rho.parties(); ++k)
    if (assignment.locals[k].size() != rho.dims[k])
      throw std::invalid_argument("assignment local dimension mismatch");
  Vector u = product_vector(assignment);
  Complex val = u.adjoint() * rho.mat * u;
  return val.real();
}

namespace detail {

inline Matrix pauli(int alpha) {
  Matrix p(2, 2);
  switch (alpha) {
    case 0: p << 0, 1, 1, 0; break;                              // x
    case 1: p << 0, Complex(0, -1), Complex(0, 1), 0; break;     // y
    case 2: p << 1, 0, 0, -1; break;                             // z
    default: throw std::invalid_argument("pauli index out of range");
  }
  return p;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace detail

// g_{a1..am} = tr(rho sigma^{a1} x ... x sigma^{am}); all parties qubits.
inline CorrelationTensor correlation_tensor(const DensityOperator& rho, int order) {
  for (int d : rho.dims)
    if (d != 2) throw std::invalid_argument("correlation tensor is qubit-only");
  if (order != rho.parties())
    throw std::invalid_argument("order must match party count");

  const long dim = rho.total_dim();
  long count = 1;
  for (int k = 0; k < order; ++k) count *= 3;

  CorrelationTensor g;
  g.order = order;
  g.entries.resize(count);
  std::vector<int> alpha(order);
  for (long idx = 0; idx < count; ++idx) {
    long rem = idx;
    for (int k = order - 1; k >= 0; --k) {
      alpha[k] = static_cast<int>(rem % 3);
      rem /= 3;
    }
    Complex tr = 0;
    for (long i = 0; i < dim; ++i)
      for (long j = 0; j < dim; ++j) {
        Complex op = 1;
        for (int k = 0; k < order; ++k) {
          int ik = static_cast<int>((i >> (order - 1 - k)) & 1);
          int jk = static_cast<int>((j >> (order - 1 - k)) & 1);
          op *= detail::pauli(alpha[k])(ik, jk);
          if (op == Complex(0, 0)) break;
        }
        tr += rho.mat(j, i) * op;
      }
    g.entries[idx] = tr.real();
  }
  return g;
}

inline bool check_density_invariants(const DensityOperator& rho,
                                     double* min_eig = nullptr) {
  if (!detail::is_hermitian(rho.mat, kHermTol)) return false;
  if (std::abs(rho.mat.trace().real() - 1.0) > kNormTol) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.mat, Eigen::EigenvaluesOnly);
  double lo = es.eigenvalues().minCoeff();
  if (min_eig) *min_eig = lo;
  return lo >= kPsdTol;
}

}  // namespace groverian
