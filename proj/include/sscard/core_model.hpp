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

#ifndef SSCARD_CORE_MODEL_HPP_
#define SSCARD_CORE_MODEL_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <utility>

#include <boost/math/special_functions/sin_pi.hpp>

#include "sscard/params.hpp"

namespace sscard {

using ComplexValue = std::complex<double>;

[[nodiscard]] constexpr std::pair<double, double> support() noexcept { return {-pi, pi}; }

[[nodiscard]] constexpr bool in_support(double x) noexcept { return x >= -pi && x <= pi; }

/// Density; zero outside [-pi, pi].
[[nodiscard]] inline double pdf(const SscParams& p, double x) {
  detail::require_finite(x, "pdf");
  if (!in_support(x)) return 0.0;
  const double value = (1.0 + p.lambda() * std::sin(x)) * (1.0 + p.rho() * std::cos(x)) / two_pi;
  // Only round-off can push a factor below zero at lambda, rho = +-1.
  return std::max(value, 0.0);
}

/// log of the density, -infinity where the density vanishes.
[[nodiscard]] inline double log_pdf(const SscParams& p, double x) {
  detail::require_finite(x, "log_pdf");
  if (!in_support(x)) return -std::numeric_limits<double>::infinity();
  const double sine_factor = 1.0 + p.lambda() * std::sin(x);
  const double cosine_factor = 1.0 + p.rho() * std::cos(x);
  if (sine_factor <= 0.0 || cosine_factor <= 0.0) {
    return -std::numeric_limits<double>::infinity();
  }
  return std::log(sine_factor) + std::log(cosine_factor) - std::log(two_pi);
}

/// Cumulative distribution function, 0 below the support and 1 above it.
///
/// F(x) = 1/2 + (x - lambda (cos x + 1) + rho sin x - (lambda rho / 4)(cos 2x - 1)) / 2pi,
/// clamped to [0, 1] so that trig round-off never leaks outside.
[[nodiscard]] inline double cdf(const SscParams& p, double x) {
  detail::require_finite(x, "cdf");
  if (x <= -pi) return 0.0;
  if (x >= pi) return 1.0;
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double lr = p.lambda() * p.rho();
  // cos 2x - 1 = -2 sin^2 x
  const double bracket = x - p.lambda() * (c + 1.0) + p.rho() * s + 0.5 * lr * s * s;
  return std::clamp(0.5 + bracket / two_pi, 0.0, 1.0);
}

/// 1 - F(x), evaluated in powers-of-(pi - x) friendly form so that it keeps
/// full relative precision as x approaches pi.
[[nodiscard]] inline double survival(const SscParams& p, double x) {
  detail::require_finite(x, "survival");
  if (x <= -pi) return 1.0;
  if (x >= pi) return 0.0;
  const double t = pi - x;
  const double half = std::sin(0.5 * t);
  const double st = std::sin(t);
  // 2pi (1 - F) = t + lambda (1 - cos t) - rho sin t + (lambda rho / 4)(cos 2t - 1)
  const double bracket = t + 2.0 * p.lambda() * half * half - p.rho() * st -
                         0.5 * p.lambda() * p.rho() * st * st;
  return std::clamp(bracket / two_pi, 0.0, 1.0);
}

namespace detail {

// sin(pi a) / (pi a), exactly 1 at a = 0 and exactly 0 at the other integers.
inline double normalized_sinc(double a) {
  if (a == 0.0) return 1.0;
  return boost::math::sin_pi(a) / (pi * a);
}

}  // namespace detail

/// Characteristic function E exp(itX).
///
/// Expanding the density into exponentials gives
///   psi(t) = S(t) + (lambda / 2i)(S(t+1) - S(t-1)) + (rho / 2)(S(t+1) + S(t-1))
///          + (lambda rho / 4i)(S(t+2) - S(t-2)),
/// with S(a) = sin(pi a) / (pi a). This equals the rational-times-sin(pi t) closed
/// form away from t in {0, +-1, +-2} and is continuous through those points, where
/// it reduces to psi(0) = 1, psi(+-1) = rho/2 +- i lambda/2 and
/// psi(+-2) = +- i lambda rho / 4.
[[nodiscard]] inline ComplexValue cf(const SscParams& p, double t) {
  detail::require_finite(t, "cf");
  using detail::normalized_sinc;
  const double s0 = normalized_sinc(t);
  const double sp1 = normalized_sinc(t + 1.0);
  const double sm1 = normalized_sinc(t - 1.0);
  const double sp2 = normalized_sinc(t + 2.0);
  const double sm2 = normalized_sinc(t - 2.0);
  const double lambda = p.lambda();
  const double rho = p.rho();
  const double re = s0 + 0.5 * rho * (sp1 + sm1);
  const double im = -0.5 * lambda * (sp1 - sm1) - 0.25 * lambda * rho * (sp2 - sm2);
  return {re, im};
}

}  // namespace sscard

#endif  // SSCARD_CORE_MODEL_HPP_
