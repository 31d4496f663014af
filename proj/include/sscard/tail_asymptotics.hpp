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

#ifndef SSCARD_TAIL_ASYMPTOTICS_HPP_
#define SSCARD_TAIL_ASYMPTOTICS_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "sscard/core_model.hpp"
#include "sscard/params.hpp"

namespace sscard {

enum class TailSide { upper, lower };

[[nodiscard]] inline const char* to_string(TailSide side) noexcept {
  return side == TailSide::upper ? "upper" : "lower";
}

inline constexpr int tail_max_order = 6;

namespace detail {

template <class Real>
Real factorial(int k) {
  Real f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Coefficient of t^k in 1 - cos t, sin t and cos 2t - 1.
template <class Real>
Real one_minus_cos_coeff(int k) {
  if (k == 0 || k % 2 != 0) return 0;
  return Real((k / 2) % 2 == 1 ? 1 : -1) / factorial<Real>(k);
}

template <class Real>
Real sin_coeff(int k) {
  if (k % 2 == 0) return 0;
  return Real(((k - 1) / 2) % 2 == 0 ? 1 : -1) / factorial<Real>(k);
}

template <class Real>
Real cos2_minus_one_coeff(int k) {
  if (k == 0 || k % 2 != 0) return 0;
  return Real((k / 2) % 2 == 0 ? 1 : -1) * std::ldexp(Real(1), k) / factorial<Real>(k);
}

template <class Real>
Real tail_series_coefficient(Real lambda, Real rho, int k) {
  Real c = (k == 1) ? 1 : 0;
  c += lambda * one_minus_cos_coeff<Real>(k);
  c -= rho * sin_coeff<Real>(k);
  c += lambda * rho * cos2_minus_one_coeff<Real>(k) / 4;
  return c / (2 * std::numbers::pi_v<Real>);
}

inline double side_lambda(const SscParams& p, TailSide side) {
  return side == TailSide::upper ? p.lambda() : -p.lambda();
}

}  // namespace detail

/// Coefficient of t^k (k >= 1) in the tail probability as a power series:
/// upper side 1 - F(pi - t), lower side F(-pi + t).
///
/// 2pi (1 - F(pi - t)) = t + lambda (1 - cos t) - rho sin t + (lambda rho / 4)(cos 2t - 1),
/// and the lower side is the same series with lambda replaced by -lambda.
[[nodiscard]] inline double tail_series_coefficient(const SscParams& p, TailSide side, int k) {
  if (k < 1) throw domain_error("tail_series_coefficient: k must be >= 1");
  return detail::tail_series_coefficient<double>(detail::side_lambda(p, side), p.rho(), k);
}

/// Exact tail probability at distance t from the endpoint (1 - F(pi - t) or
/// F(-pi + t)) minus its order-`order` partial sum. Evaluated in long double:
/// at t = 0.025 the order-6 remainder is around 1e-16.
[[nodiscard]] inline long double tail_remainder(const SscParams& p, TailSide side, long double t,
                                                int order) {
  if (order < 0) throw domain_error("tail_remainder: order must be >= 0");
  const long double lambda = detail::side_lambda(p, side);
  const long double rho = p.rho();
  const long double half = std::sin(t / 2);
  const long double st = std::sin(t);
  const long double exact =
      (t + 2 * lambda * half * half - rho * st - lambda * rho * st * st / 2) /
      (2 * std::numbers::pi_v<long double>);
  long double partial = 0;
  long double power = t;
  for (int k = 1; k <= order; ++k) {
    partial += detail::tail_series_coefficient<long double>(lambda, rho, k) * power;
    power *= t;
  }
  return exact - partial;
}

/// First six tail coefficients. Upper side:
///   2pi a1 = 1 - rho,            2pi a2 = (lambda / 2)(1 - rho),
///   2pi a3 = rho / 6,            2pi a4 = (lambda / 24)(4 rho - 1),
///   2pi a5 = -rho / 120,         2pi a6 = (lambda / 720)(1 - 16 rho).
struct TailExpansion {
  std::array<double, tail_max_order> alphas{};
  TailSide side = TailSide::upper;

  /// Partial sum sum_{k <= order} alpha_k t^k.
  [[nodiscard]] double partial_sum(double t, int order) const {
    double sum = 0.0;
    double power = t;
    for (int k = 1; k <= order; ++k) {
      sum += alphas[static_cast<std::size_t>(k - 1)] * power;
      power *= t;
    }
    return sum;
  }
};

[[nodiscard]] inline TailExpansion tail_coefficients(const SscParams& p, TailSide side) {
  TailExpansion e;
  e.side = side;
  for (int k = 1; k <= tail_max_order; ++k) {
    e.alphas[static_cast<std::size_t>(k - 1)] = tail_series_coefficient(p, side, k);
  }
  return e;
}

namespace detail {

inline void require_order(int order, const char* what) {
  if (order < 1 || order > tail_max_order) {
    throw domain_error(std::string(what) + ": order must be in 1..6");
  }
}

inline void require_tail_distance(double t, const char* what) {
  if (!(t > 0.0 && t <= 1.0)) {
    throw domain_error(std::string(what) + ": distance to the endpoint must be in (0, 1]");
  }
}

}  // namespace detail

/// Truncated series for 1 - F(x) near pi.
[[nodiscard]] inline double tail_survival_approx(const SscParams& p, double x, int order) {
  detail::require_finite(x, "tail_survival_approx");
  detail::require_order(order, "tail_survival_approx");
  const double t = pi - x;
  detail::require_tail_distance(t, "tail_survival_approx");
  return tail_coefficients(p, TailSide::upper).partial_sum(t, order);
}

/// Truncated series for F(x) near -pi.
[[nodiscard]] inline double tail_cdf_approx(const SscParams& p, double x, int order) {
  detail::require_finite(x, "tail_cdf_approx");
  detail::require_order(order, "tail_cdf_approx");
  const double t = x + pi;
  detail::require_tail_distance(t, "tail_cdf_approx");
  return tail_coefficients(p, TailSide::lower).partial_sum(t, order);
}

/// Coefficients b_1..b_order of the reverted series t = sum b_k u^k solving
/// u = sum a_k t^k. Requires a_1 != 0.
[[nodiscard]] inline std::vector<double> revert_series(const std::vector<double>& a) {
  const std::size_t order = a.size();
  if (order == 0 || a[0] == 0.0) {
    throw domain_error("revert_series: leading coefficient must be nonzero");
  }
  // b[j] is the coefficient of u^(j+1).
  std::vector<double> b(order, 0.0);
  b[0] = 1.0 / a[0];
  for (std::size_t m = 1; m < order; ++m) {
    // Coefficient of u^(m+1) in sum_k a_k T(u)^k with b[m] still zero.
    std::vector<double> power(b);  // T^1, truncated at u^order
    double c = a[0] * power[m];
    for (std::size_t k = 1; k < order; ++k) {
      std::vector<double> next(order, 0.0);
      for (std::size_t i = 0; i < order; ++i) {
        if (power[i] == 0.0) continue;
        for (std::size_t j = 0; i + j + 1 < order; ++j) next[i + j + 1] += power[i] * b[j];
      }
      power.swap(next);
      c += a[k] * power[m];
    }
    b[m] = -c / a[0];
  }
  return b;
}

/// Series approximation of F^-1(1 - u) for small u, obtained by reverting the
/// upper tail expansion: pi - u/a1 + (a2/a1^3) u^2 - ...
[[nodiscard]] inline double quantile_tail_approx(const SscParams& p, double u, int order) {
  detail::require_order(order, "quantile_tail_approx");
  if (!(u > 0.0 && u < 0.1)) throw domain_error("quantile_tail_approx: u must be in (0, 0.1)");
  if (p.rho() == 1.0) {
    throw domain_error("quantile_tail_approx: rho = 1 has no linear tail term");
  }
  const auto e = tail_coefficients(p, TailSide::upper);
  const std::vector<double> a(e.alphas.begin(), e.alphas.begin() + order);
  const auto b = revert_series(a);
  double t = 0.0;
  double power = u;
  for (const double coeff : b) {
    t += coeff * power;
    power *= u;
  }
  return pi - t;
}

/// Normalization for the sample maximum: rate (X_{n,n} - pi) converges in law
/// to the standard Weibull extreme-value law G(x) = exp(x) on x <= 0, with
/// rate = n a1 = n (1 - rho) / 2pi. The same rate normalizes (-X)_{n,n}, so
/// the minimum satisfies rate (-X_{1,n} - pi) -> G as well.
struct EvNormalization {
  double rate = 0.0;
  int limit_index = -1;
};

[[nodiscard]] inline EvNormalization ev_normalization(const SscParams& p, std::int64_t n) {
  if (n < 1) throw domain_error("ev_normalization: n must be >= 1");
  if (p.rho() == 1.0) {
    throw domain_error("ev_normalization: degenerate rate, the density vanishes at the endpoint");
  }
  return {static_cast<double>(n) * (1.0 - p.rho()) / two_pi, -1};
}

/// Standard Weibull extreme-value cdf with index -1.
[[nodiscard]] inline double weibull_limit_cdf(double x) noexcept {
  return x <= 0.0 ? std::exp(x) : 1.0;
}

/// (pi - x) f(x) / (1 - F(x)), the von Mises ratio for the upper endpoint.
/// At x = pi returns the limit: 1, or 3 when rho = 1 (density zero of order two).
[[nodiscard]] inline double von_mises_ratio(const SscParams& p, double x) {
  detail::require_finite(x, "von_mises_ratio");
  if (x < -pi || x > pi) throw domain_error("von_mises_ratio: x must lie in [-pi, pi]");
  const double tail = survival(p, x);
  if (x == pi || tail == 0.0) return p.rho() == 1.0 ? 3.0 : 1.0;
  return (pi - x) * pdf(p, x) / tail;
}

/// True when the density is non-increasing on the grid over (pi - window, pi].
[[nodiscard]] inline bool pdf_ultimately_nonincreasing(const SscParams& p, double window,
                                                       int grid_points = 2048) {
  if (!(window > 0.0 && window <= two_pi)) {
    throw domain_error("pdf_ultimately_nonincreasing: window must be in (0, 2pi]");
  }
  if (grid_points < 2) throw domain_error("pdf_ultimately_nonincreasing: need >= 2 grid points");
  const double step = window / grid_points;
  double previous = pdf(p, pi - window + step);
  for (int i = 2; i <= grid_points; ++i) {
    const double current = pdf(p, i == grid_points ? pi : pi - window + i * step);
    if (current > previous * (1.0 + 1e-14)) return false;
    previous = current;
  }
  return true;
}

/// (1 - F*(gamma x)) / (1 - F*(x)) with F*(x) = F(pi - 1/x), x > 0.
/// Tends to 1/gamma as x -> infinity (F* is in the Frechet domain).
[[nodiscard]] inline double frechet_tail_ratio(const SscParams& p, double gamma, double x) {
  if (!(gamma > 0.0) || !(x > 0.0)) throw domain_error("frechet_tail_ratio: need gamma, x > 0");
  const double denominator = survival(p, pi - 1.0 / x);
  if (denominator == 0.0) throw domain_error("frechet_tail_ratio: x too large for double precision");
  return survival(p, pi - 1.0 / (gamma * x)) / denominator;
}

}  // namespace sscard

#endif  // SSCARD_TAIL_ASYMPTOTICS_HPP_
