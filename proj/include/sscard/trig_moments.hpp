// Copyright 2026 The sscard Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SSCARD_TRIG_MOMENTS_HPP_
#define SSCARD_TRIG_MOMENTS_HPP_

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "sscard/params.hpp"

namespace sscard {

/// Trigonometric power integrals over [-pi, pi], indexed by n = 0..order:
///   cos_moments[n]     = int x^n cos x dx
///   sin_moments[n]     = int x^n sin x dx
///   sin_cos_moments[n] = int x^n sin x cos x dx   (half of int x^n sin 2x dx)
struct TrigIntegralTable {
  int order = 0;
  std::vector<double> cos_moments;
  std::vector<double> sin_moments;
  std::vector<double> sin_cos_moments;
};

/// Builds the table by integration-by-parts recurrences. Parity zeros are
/// assigned directly, never computed.
[[nodiscard]] inline TrigIntegralTable trig_table(int max_order) {
  if (max_order < 0) throw domain_error("trig_table: max_order must be >= 0");
  const auto size = static_cast<std::size_t>(max_order) + 1;
  TrigIntegralTable table{max_order, std::vector<double>(size, 0.0),
                          std::vector<double>(size, 0.0), std::vector<double>(size, 0.0)};
  for (int k = 1; k <= max_order; ++k) {
    const auto i = static_cast<std::size_t>(k);
    const double coeff = static_cast<double>(k) * static_cast<double>(k - 1);
    const double pi_pow = std::pow(pi, k);
    if (k % 2 == 0) {
      // I_k = -2k pi^(k-1) - k(k-1) I_(k-2)
      table.cos_moments[i] = -2.0 * k * std::pow(pi, k - 1) - coeff * table.cos_moments[i - 2];
    } else if (k == 1) {
      table.sin_moments[i] = two_pi;
      table.sin_cos_moments[i] = -0.5 * pi;
    } else {
      // J_k = 2 pi^k - k(k-1) J_(k-2);  H_k = -pi^k / 2 - (k(k-1)/4) H_(k-2)
      table.sin_moments[i] = 2.0 * pi_pow - coeff * table.sin_moments[i - 2];
      table.sin_cos_moments[i] = -0.5 * pi_pow - 0.25 * coeff * table.sin_cos_moments[i - 2];
    }
  }
  return table;
}

inline constexpr int max_moment_order = 8;

/// E X^k for k = 1..8 from the closed forms
///   E X^k = (int x^k dx + lambda J_k + rho I_k + lambda rho H_k) / 2pi,
/// written out as polynomials in pi.
[[nodiscard]] inline double exact_moment(const SscParams& p, int k) {
  const double l = p.lambda();
  const double r = p.rho();
  const double p2 = pi * pi;
  const double p4 = p2 * p2;
  const double p6 = p4 * p2;
  const double p8 = p4 * p4;
  // J_k / 2pi for odd k. I_(k+1) = -(k+1) J_k, so the even orders reuse them.
  const double j3 = p2 - 6.0;
  const double j5 = p4 - 20.0 * p2 + 120.0;
  const double j7 = p6 - 42.0 * p4 + 840.0 * p2 - 5040.0;
  switch (k) {
    case 1:
      return l * (1.0 - 0.25 * r);
    case 2:
      return p2 / 3.0 - 2.0 * r;
    case 3:
      return l * j3 + l * r * (3.0 - 2.0 * p2) / 8.0;
    case 4:
      return p4 / 5.0 - 4.0 * r * j3;
    case 5:
      return l * j5 - l * r * (2.0 * p4 - 10.0 * p2 + 15.0) / 8.0;
    case 6:
      return p6 / 7.0 - 6.0 * r * j5;
    case 7:
      return l * j7 - l * r * (4.0 * p6 - 42.0 * p4 + 210.0 * p2 - 315.0) / 16.0;
    case 8:
      return p8 / 9.0 - 8.0 * r * j7;
    default:
      throw domain_error("exact_moment: order must be in 1..8, got " + std::to_string(k));
  }
}

/// Raw moments plus the second-order quantities that drive the asymptotic
/// covariance of the moment estimators.
///
/// With mu = 8 - 2 rho, the influence functions of the estimators are
/// -(X^2)/2 for rho-hat and (8X - lambda X^2)/mu for lambda-hat, hence:
///   var_x2    = Var(X^2)
///   var_lin   = Var(8X - lambda X^2)
///   cov_cross = Cov(X^2, 8X - lambda X^2)
struct MomentSet {
  std::array<double, max_moment_order> mu{};  // mu[k-1] = E X^k
  double var_x2 = 0.0;
  double var_lin = 0.0;
  double cov_cross = 0.0;
  double lambda_denominator = 0.0;  // 8 - pi^2/3 + E X^2

  [[nodiscard]] double raw(int k) const { return mu.at(static_cast<std::size_t>(k - 1)); }
};

/// Cov(a0 X + a1 X^2, b0 X + b1 X^2) from raw moments.
[[nodiscard]] inline double linear_covariance(const MomentSet& m, std::array<double, 2> a,
                                              std::array<double, 2> b) {
  const double var_x = m.raw(2) - m.raw(1) * m.raw(1);
  const double cov_x_x2 = m.raw(3) - m.raw(1) * m.raw(2);
  const double var_x2 = m.raw(4) - m.raw(2) * m.raw(2);
  return a[0] * b[0] * var_x + (a[0] * b[1] + a[1] * b[0]) * cov_x_x2 + a[1] * b[1] * var_x2;
}

[[nodiscard]] inline MomentSet moment_set(const SscParams& p) {
  MomentSet m;
  for (int k = 1; k <= max_moment_order; ++k) {
    m.mu[static_cast<std::size_t>(k - 1)] = exact_moment(p, k);
  }
  const std::array<double, 2> square{0.0, 1.0};
  const std::array<double, 2> lambda_influence{8.0, -p.lambda()};
  m.var_x2 = linear_covariance(m, square, square);
  m.var_lin = linear_covariance(m, lambda_influence, lambda_influence);
  m.cov_cross = linear_covariance(m, square, lambda_influence);
  m.lambda_denominator = 8.0 - pi * pi / 3.0 + m.raw(2);
  return m;
}

}  // namespace sscard

#endif  // SSCARD_TRIG_MOMENTS_HPP_
