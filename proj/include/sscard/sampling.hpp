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

#ifndef SSCARD_SAMPLING_HPP_
#define SSCARD_SAMPLING_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <system_error>
#include <vector>

#include "sscard/core_model.hpp"
#include "sscard/params.hpp"

namespace sscard {

enum class InversionMode { digit_refinement, bracket_bisection };

/// How quantile() inverts the cdf.
///
/// digit_refinement walks from x = 1 in decimal steps, shrinking the step by ten
/// on every overshoot until `nbr_dec` decimals are fixed; the result is within
/// 10^-nbr_dec of the true quantile. bracket_bisection halves [-pi, pi] until
/// |F(x) - v| <= abs_tol. `max_iter` caps the number of cdf evaluations.
struct InversionConfig {
  InversionMode mode = InversionMode::bracket_bisection;
  int nbr_dec = 9;
  double abs_tol = 1e-12;
  int max_iter = 2000;

  [[nodiscard]] static InversionConfig digits(int nbr_dec) {
    return {InversionMode::digit_refinement, nbr_dec, 1e-12, 2000};
  }
  [[nodiscard]] static InversionConfig bracket(double abs_tol) {
    return {InversionMode::bracket_bisection, 9, abs_tol, 2000};
  }

  void validate() const {
    if (nbr_dec < 1 || nbr_dec > 12) throw domain_error("InversionConfig: nbr_dec must be in [1, 12]");
    if (!(abs_tol > 0.0)) throw domain_error("InversionConfig: abs_tol must be > 0");
    if (max_iter < 1) throw domain_error("InversionConfig: max_iter must be >= 1");
  }
};

namespace detail {

inline double quantile_digits(const SscParams& p, double v, const InversionConfig& cfg) {
  double x = 1.0;
  const double start = cdf(p, x);
  if (start == v) return x;
  int count = 0;
  if (start < v) {
    // Climb with h = 1, 0.1, ...; each overshoot steps back and fixes one more decimal.
    double h = 1.0;
    int fixed = -1;
    while (fixed < cfg.nbr_dec) {
      if (count++ >= cfg.max_iter) {
        throw convergence_error("quantile: digit refinement hit the iteration cap", x, x + h);
      }
      x += h;
      const double fx = cdf(p, x);
      if (fx == v) return x;
      if (fx > v) {
        ++fixed;
        x -= h;
        h /= 10.0;
      }
    }
  } else {
    double h = 0.1;
    int fixed = 0;
    while (fixed < cfg.nbr_dec) {
      if (count++ >= cfg.max_iter) {
        throw convergence_error("quantile: digit refinement hit the iteration cap", x - h, x);
      }
      x -= h;
      const double fx = cdf(p, x);
      if (fx == v) return x;
      if (fx < v) {
        ++fixed;
        x += h;
        h /= 10.0;
      }
    }
  }
  return x;
}

inline double quantile_bisection(const SscParams& p, double v, const InversionConfig& cfg) {
  double lo = -pi;
  double hi = pi;
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fm = cdf(p, mid);
    if (std::abs(fm - v) <= cfg.abs_tol) return mid;
    if (mid == lo || mid == hi) {
      throw convergence_error("quantile: bracket collapsed before reaching abs_tol", lo, hi);
    }
    if (fm < v) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw convergence_error("quantile: bisection hit the iteration cap", lo, hi);
}

}  // namespace detail

/// F^-1(v). v = 0 and v = 1 map to the endpoints without iterating.
[[nodiscard]] inline double quantile(const SscParams& p, double v, const InversionConfig& cfg = {}) {
  cfg.validate();
  if (!(v >= 0.0 && v <= 1.0)) throw domain_error("quantile: probability must be in [0, 1]");
  if (v == 0.0) return -pi;
  if (v == 1.0) return pi;
  const double x = cfg.mode == InversionMode::digit_refinement ? detail::quantile_digits(p, v, cfg)
                                                               : detail::quantile_bisection(p, v, cfg);
  return std::clamp(x, -pi, pi);
}

/// splitmix64 finalizer; seeds for replicate `index` of base seed `seed` are
/// derive_seed(seed, index) = splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15).
[[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Uniform stream on [0, 1): std::mt19937_64 seeded with the given value,
/// each draw is (word >> 11) * 2^-53. Both pieces are fully specified by the
/// standard, so a seed reproduces the same stream on every platform.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

  double operator()() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

struct SampleBatch {
  std::vector<double> values;
  std::uint64_t seed = 0;
  SscParams params{0.0, 0.0};
};

/// n inverse-transform draws quantile(p, U_i) consuming one UniformStream(seed)
/// sequentially. No splitting: a batch is a single stream.
[[nodiscard]] inline SampleBatch sample(const SscParams& p, std::int64_t n, std::uint64_t seed,
                                        const InversionConfig& cfg = {}) {
  if (n < 1) throw domain_error("sample: n must be >= 1");
  cfg.validate();
  SampleBatch batch{{}, seed, p};
  batch.values.reserve(static_cast<std::size_t>(n));
  UniformStream uniform(seed);
  for (std::int64_t i = 0; i < n; ++i) batch.values.push_back(quantile(p, uniform(), cfg));
  return batch;
}

/// Maximum of n iid draws via F^-1(U^(1/n)); exact in law and O(1) in n.
[[nodiscard]] inline double sample_block_maximum(const SscParams& p, std::int64_t n,
                                                 UniformStream& uniform, const InversionConfig& cfg = {}) {
  const double u = uniform();
  return quantile(p, std::exp(std::log(u) / static_cast<double>(n)), cfg);
}

/// Minimum of n iid draws via F^-1(1 - U^(1/n)).
[[nodiscard]] inline double sample_block_minimum(const SscParams& p, std::int64_t n,
                                                 UniformStream& uniform, const InversionConfig& cfg = {}) {
  const double u = uniform();
  return quantile(p, -std::expm1(std::log(u) / static_cast<double>(n)), cfg);
}

/// One-sample Kolmogorov-Smirnov distance sup |F_n - G| against a continuous cdf.
template <class Cdf>
[[nodiscard]] double ks_distance(std::vector<double> values, Cdf&& reference) {
  if (values.empty()) throw domain_error("ks_distance: empty sample");
  std::sort(values.begin(), values.end());
  const auto n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double g = reference(values[i]);
    const double below = static_cast<double>(i) / n;
    const double above = static_cast<double>(i + 1) / n;
    d = std::max({d, above - g, g - below});
  }
  return d;
}

[[nodiscard]] inline double ks_statistic(const SampleBatch& batch) {
  const SscParams p = batch.params;
  return ks_distance(batch.values, [&p](double x) { return cdf(p, x); });
}

/// Asymptotic Kolmogorov survival function P(sqrt(n) D_n > x).
[[nodiscard]] inline double kolmogorov_survival(double x) {
  if (x <= 0.0) return 1.0;
  if (x < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-18) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

/// Writes one value per line with the shortest round-trip decimal form.
inline void write_values(std::ostream& out, std::span<const double> values) {
  char buffer[64];
  for (const double v : values) {
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, v);
    out.write(buffer, end - buffer);
    out.put('\n');
  }
}

/// Reads one decimal value per line; blank lines are skipped.
[[nodiscard]] inline std::vector<double> read_values(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const char* begin = line.data() + first;
    const char* end = line.data() + last + 1;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
      throw domain_error("read_values: line " + std::to_string(line_no) + " is not a number");
    }
    values.push_back(v);
  }
  return values;
}

}  // namespace sscard

#endif  // SSCARD_SAMPLING_HPP_
