// SPDX-License-Identifier: Apache-2.0
//
// Exact piecewise P_max for the two one-parameter three-qubit families,
// the general three-coefficient W-type rule and circumcircle geometry.

#pragma once

#include "groverian/core.hpp"

#include <cmath>
#include <string>

namespace groverian {

enum class Regime { LargestFirst, Circumcircle, LargestLast };

inline std::string regime_name(Regime r) {
  switch (r) {
    case Regime::LargestFirst: return "largest_first";
    case Regime::Circumcircle: return "circumcircle";
    case Regime::LargestLast: return "largest_last";
  }
  return "?";
}

struct FamilyCurvePoint {
  double kappa = 0.0;
  double p_max = 0.0;
  Regime regime = Regime::LargestFirst;
  bool on_lower_boundary = false;
  bool on_upper_boundary = false;
};

// kappa1 = ((sqrt5-1)/2)^{1/2}, kappa2 = ((sqrt5+1)/2)^{1/2} = 1/kappa1.
inline std::pair<double, double> w3_boundaries() {
  double s5 = std::sqrt(5.0);
  return {std::sqrt((s5 - 1.0) / 2.0), std::sqrt((s5 + 1.0) / 2.0)};
}

inline std::pair<double, double> w4_boundaries() {
  double s57 = std::sqrt(57.0);
  double b1 = std::sqrt(std::cbrt(18.0 * s57 + 134.0) -
                        std::cbrt(18.0 * s57 - 134.0) - 1.0) / 3.0;
  double b2 = std::sqrt(std::cbrt(46.0 + 6.0 * s57) +
                        std::cbrt(46.0 - 6.0 * s57) + 1.0) / std::sqrt(3.0);
  return {b1, b2};
}

// (|100> + k|010> + k^2|001>) / sqrt(1 + k^2 + k^4)
inline PureState w3_state(double kappa) {
  if (kappa < 0) throw std::invalid_argument("kappa must be nonnegative");
  PureState psi;
  psi.dims = {2, 2, 2};
  psi.amps = Vector::Zero(8);
  psi.amps(4) = 1.0;
  psi.amps(2) = kappa;
  psi.amps(1) = kappa * kappa;
  return normalize(psi);
}

// (|100> + k|010> + k^2|001> + k^3|111>) / sqrt(1 + k^2 + k^4 + k^6)
inline PureState w4_state(double kappa) {
  if (kappa < 0) throw std::invalid_argument("kappa must be nonnegative");
  PureState psi;
  psi.dims = {2, 2, 2};
  psi.amps = Vector::Zero(8);
  psi.amps(4) = 1.0;
  psi.amps(2) = kappa;
  psi.amps(1) = kappa * kappa;
  psi.amps(7) = kappa * kappa * kappa;
  return normalize(psi);
}

inline FamilyCurvePoint w3_pmax(double kappa) {
  if (kappa < 0) throw std::invalid_argument("kappa must be nonnegative");
  auto [k1, k2] = w3_boundaries();
  FamilyCurvePoint pt;
  pt.kappa = kappa;
  pt.on_lower_boundary = std::abs(kappa - k1) <= 1e-10;
  pt.on_upper_boundary = std::abs(kappa - k2) <= 1e-10;
  double k2p = kappa * kappa;
  if (kappa < k1) {
    pt.regime = Regime::LargestFirst;
    pt.p_max = 1.0 / (1.0 + k2p + k2p * k2p);
  } else if (kappa > k2) {
    pt.regime = Regime::LargestLast;
    // k^4 / (1 + k^2 + k^4), evaluated via reciprocals for large kappa
    double inv2 = 1.0 / k2p;
    pt.p_max = 1.0 / (1.0 + inv2 + inv2 * inv2);
  } else {
    pt.regime = Regime::Circumcircle;
    double norm = 1.0 + k2p + k2p * k2p;
    double k6 = k2p * k2p * k2p;
    pt.p_max = 4.0 * k6 / (norm * norm * (3.0 * k2p - 1.0 - k2p * k2p));
  }
  return pt;
}

inline FamilyCurvePoint w4_pmax(double kappa) {
  if (kappa < 0) throw std::invalid_argument("kappa must be nonnegative");
  auto [b1, b2] = w4_boundaries();
  FamilyCurvePoint pt;
  pt.kappa = kappa;
  pt.on_lower_boundary = std::abs(kappa - b1) <= 1e-10;
  pt.on_upper_boundary = std::abs(kappa - b2) <= 1e-10;
  double k2 = kappa * kappa;
  if (kappa < b1) {
    pt.regime = Regime::LargestFirst;
    pt.p_max = 1.0 / (1.0 + k2 + k2 * k2 + k2 * k2 * k2);
  } else if (kappa > b2) {
    pt.regime = Regime::LargestLast;
    double i2 = 1.0 / k2;
    pt.p_max = 1.0 / (1.0 + i2 + i2 * i2 + i2 * i2 * i2);
  } else {
    pt.regime = Regime::Circumcircle;
    double k4 = k2 * k2, k6 = k4 * k2, k8 = k4 * k4, k10 = k8 * k2,
           k12 = k6 * k6;
    // denominator coefficient of k^6 is 12: this is what makes the branch
    // continuous at both boundaries and symmetric under k <-> 1/k
    double den = -1.0 + 2.0 * k2 + k4 + 12.0 * k6 + k8 + 2.0 * k10 - k12;
    pt.p_max = 8.0 * k6 / den;
  }
  return pt;
}

// Squared circumdiameter 4R^2 of the strictly acute triangle with sides a,b,c.
inline double triangle_circumdiameter_sq(double a, double b, double c) {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("sides must be nonnegative");
  double hi = std::max({a, b, c});
  double per = a + b + c;
  if (!(hi < per - hi))
    throw std::domain_error(
        "degenerate triangle: use the largest-coefficient rule");
  double rest = a * a + b * b + c * c - hi * hi;
  if (!(hi * hi < rest))
    throw std::domain_error(
        "triangle is not acute: use the largest-coefficient rule");
  double s = per / 2.0;
  double area_sq = s * (s - a) * (s - b) * (s - c);  // Heron
  return (a * a) * (b * b) * (c * c) / (4.0 * area_sq);
}

// General rule for a|100> + b|010> + c|001>: the squared largest coefficient
// when it dominates (right/obtuse/degenerate triangle), otherwise the squared
// circumdiameter of the acute triangle formed by the coefficients.
inline double wtype_general_pmax(double a, double b, double c) {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("coefficients must be nonnegative");
  double n2 = a * a + b * b + c * c;
  if (n2 <= 0) throw std::invalid_argument("null coefficient vector");
  double nrm = std::sqrt(n2);
  a /= nrm;
  b /= nrm;
  c /= nrm;
  double hi2 = std::max({a * a, b * b, c * c});
  if (hi2 >= 0.5) return hi2;
  return triangle_circumdiameter_sq(a, b, c);
}

}  // namespace groverian
