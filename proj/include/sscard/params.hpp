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

#ifndef SSCARD_PARAMS_HPP_
#define SSCARD_PARAMS_HPP_

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sscard {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Raised for arguments outside an operation's domain (bad parameters,
/// non-finite inputs, probabilities outside [0, 1], ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an iterative inversion exhausts its iteration budget.
/// Carries the last bracket so callers can decide what to do with it.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double lower, double upper)
      : std::runtime_error(what), lower_(lower), upper_(upper) {}

  [[nodiscard]] double lower() const noexcept { return lower_; }
  [[nodiscard]] double upper() const noexcept { return upper_; }

 private:
  double lower_;
  double upper_;
};

namespace detail {

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw domain_error(std::string(what) + ": argument must be finite");
  }
}

}  // namespace detail

/// Parameter pair of the sine-skewed cardioid law.
///
/// The density is (1/2pi)(1 + lambda sin x)(1 + rho cos x) on [-pi, pi].
/// Both parameters live in [-1, 1]; anything else is rejected at
/// construction, so every SscParams in circulation is valid.
class SscParams {
 public:
  SscParams(double lambda, double rho) : lambda_(lambda), rho_(rho) {
    if (!(lambda >= -1.0 && lambda <= 1.0) || !(rho >= -1.0 && rho <= 1.0)) {
      throw domain_error("SscParams: (lambda, rho) must lie in [-1, 1]^2, got (" +
                         std::to_string(lambda) + ", " + std::to_string(rho) + ")");
    }
  }

  [[nodiscard]] double lambda() const noexcept { return lambda_; }
  [[nodiscard]] double rho() const noexcept { return rho_; }

  /// Parameters of -X when X has these parameters.
  [[nodiscard]] SscParams mirrored() const { return {-lambda_, rho_}; }

  friend bool operator==(const SscParams&, const SscParams&) = default;

 private:
  double lambda_;
  double rho_;
};

}  // namespace sscard

#endif  // SSCARD_PARAMS_HPP_
