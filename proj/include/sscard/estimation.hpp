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

#ifndef SSCARD_ESTIMATION_HPP_
#define SSCARD_ESTIMATION_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "sscard/core_model.hpp"
#include "sscard/params.hpp"
#include "sscard/trig_moments.hpp"

namespace sscard {

/// 2x2 covariance, index 0 = rho, index 1 = lambda.
using Matrix2 = std::array<std::array<double, 2>, 2>;

struct Interval {
  double lower = 0.0;
  double upper = 0.0;

  [[nodiscard]] bool contains(double x) const noexcept { return x >= lower && x <= upper; }
  [[nodiscard]] double width() const noexcept { return upper - lower; }
};

struct EstimationResult {
  double rho_hat = 0.0;     // raw, possibly outside [-1, 1]
  double lambda_hat = 0.0;  // raw, possibly outside [-1, 1]
  double rho_clamped = 0.0;
  double lambda_clamped = 0.0;
  bool clamped = false;
  std::size_t n = 0;
  Matrix2 sigma{};  // asymptotic covariance at the clamped plug-in estimates
  double ci_level = 0.0;
  Interval ci_rho;
  Interval ci_lambda;
};

struct MomentEstimate {
  double rho = 0.0;
  double lambda = 0.0;
};

/// The estimator maps applied to a first moment m1 and raw second moment m2:
///   rho    = (pi^2/3 - m2) / 2
///   lambda = 8 m1 / (8 - pi^2/3 + m2)
[[nodiscard]] inline MomentEstimate estimator_map(double m1, double m2) noexcept {
  const double third_pi_sq = pi * pi / 3.0;
  return {(third_pi_sq - m2) / 2.0, 8.0 * m1 / (8.0 - third_pi_sq + m2)};
}

/// Asymptotic covariance of (sqrt(n)(rho-hat - rho), sqrt(n)(lambda-hat - lambda)).
///
/// Delta method on the maps above, with mu = 8 - pi^2/3 + E X^2 = 8 - 2 rho:
/// d rho / d m2 = -1/2, d lambda / d m1 = 8/mu and d lambda / d m2 = -lambda/mu, so
///   S_rr = Var(X^2) / 4
///   S_ll = Var(8X - lambda X^2) / mu^2
///   S_rl = -Cov(X^2, 8X - lambda X^2) / (2 mu)
[[nodiscard]] inline Matrix2 asymptotic_covariance(const SscParams& p) {
  const MomentSet m = moment_set(p);
  const double mu = m.lambda_denominator;
  const double s_rr = m.var_x2 / 4.0;
  const double s_ll = m.var_lin / (mu * mu);
  const double s_rl = -m.cov_cross / (2.0 * mu);
  return {{{s_rr, s_rl}, {s_rl, s_ll}}};
}

/// Method-of-moments estimates from data on [-pi, pi]; uses the 1/n second moment.
[[nodiscard]] inline EstimationResult estimate(std::span<const double> data) {
  if (data.size() < 2) throw domain_error("estimate: need at least two observations");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const double x : data) {
    if (!std::isfinite(x) || !in_support(x)) {
      throw domain_error("estimate: observations must lie in [-pi, pi]");
    }
    sum += x;
    sum_sq += x * x;
  }
  const auto n = static_cast<double>(data.size());
  const MomentEstimate raw = estimator_map(sum / n, sum_sq / n);

  EstimationResult res;
  res.n = data.size();
  res.rho_hat = raw.rho;
  res.lambda_hat = raw.lambda;
  res.rho_clamped = std::clamp(raw.rho, -1.0, 1.0);
  res.lambda_clamped = std::clamp(raw.lambda, -1.0, 1.0);
  res.clamped = res.rho_clamped != raw.rho || res.lambda_clamped != raw.lambda;
  res.sigma = asymptotic_covariance({res.lambda_clamped, res.rho_clamped});
  return res;
}

/// Wald intervals estimate +- z sqrt(sigma_kk / n), centred on the raw estimates.
[[nodiscard]] inline EstimationResult confidence_intervals(EstimationResult res, double level) {
  if (!(level > 0.0 && level < 1.0)) throw domain_error("confidence_intervals: level must be in (0, 1)");
  if (res.n == 0) throw domain_error("confidence_intervals: result has no sample size");
  const boost::math::normal_distribution<double> standard;
  const double z = boost::math::quantile(standard, 0.5 * (1.0 + level));
  const auto n = static_cast<double>(res.n);
  const double half_rho = z * std::sqrt(std::max(res.sigma[0][0], 0.0) / n);
  const double half_lambda = z * std::sqrt(std::max(res.sigma[1][1], 0.0) / n);
  res.ci_level = level;
  res.ci_rho = {res.rho_hat - half_rho, res.rho_hat + half_rho};
  res.ci_lambda = {res.lambda_hat - half_lambda, res.lambda_hat + half_lambda};
  return res;
}

/// Log-likelihood surface over a regular grid on [-1, 1]^2.
///
/// log L(lambda, rho) = sum log(1 + lambda sin x_i) + sum log(1 + rho cos x_i) - n log 2pi
/// separates into two concave one-dimensional pieces, so the report simply
/// records where the grid maximum sits.
struct MleDiagnostic {
  int grid_size = 0;
  std::vector<double> axis;               // shared by lambda and rho
  std::vector<double> loglik;             // row-major, loglik[i * grid_size + j] at (axis[i], axis[j]) = (lambda, rho)
  double loglik_at_reference = 0.0;       // at p0
  double max_loglik = 0.0;
  double argmax_lambda = 0.0;
  double argmax_rho = 0.0;
  bool argmax_on_lambda_boundary = false;
  bool argmax_on_rho_boundary = false;
  bool interior_maximum = false;

  [[nodiscard]] double at(int i, int j) const {
    return loglik.at(static_cast<std::size_t>(i) * static_cast<std::size_t>(grid_size) +
                     static_cast<std::size_t>(j));
  }
};

[[nodiscard]] inline double log_likelihood(const SscParams& p, std::span<const double> data) {
  double sum = 0.0;
  for (const double x : data) sum += log_pdf(p, x);
  return sum;
}

[[nodiscard]] inline MleDiagnostic mle_diagnostic(const SscParams& p0, std::span<const double> data,
                                                  int grid_size = 41) {
  if (grid_size < 3) throw domain_error("mle_diagnostic: grid_size must be >= 3");
  MleDiagnostic report;
  report.grid_size = grid_size;
  report.axis.resize(static_cast<std::size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i) {
    report.axis[static_cast<std::size_t>(i)] = -1.0 + 2.0 * i / (grid_size - 1);
  }
  report.loglik.reserve(static_cast<std::size_t>(grid_size) * static_cast<std::size_t>(grid_size));
  report.max_loglik = -std::numeric_limits<double>::infinity();
  int best_i = 0;
  int best_j = 0;
  for (int i = 0; i < grid_size; ++i) {
    for (int j = 0; j < grid_size; ++j) {
      const double value = log_likelihood({report.axis[static_cast<std::size_t>(i)],
                                           report.axis[static_cast<std::size_t>(j)]},
                                          data);
      report.loglik.push_back(value);
      if (value > report.max_loglik) {
        report.max_loglik = value;
        best_i = i;
        best_j = j;
      }
    }
  }
  report.loglik_at_reference = log_likelihood(p0, data);
  report.argmax_lambda = report.axis[static_cast<std::size_t>(best_i)];
  report.argmax_rho = report.axis[static_cast<std::size_t>(best_j)];
  report.argmax_on_lambda_boundary = best_i == 0 || best_i == grid_size - 1;
  report.argmax_on_rho_boundary = best_j == 0 || best_j == grid_size - 1;
  report.interior_maximum = !report.argmax_on_lambda_boundary && !report.argmax_on_rho_boundary;
  return report;
}

}  // namespace sscard

#endif  // SSCARD_ESTIMATION_HPP_
