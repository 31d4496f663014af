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

#ifndef SSCARD_SIM_HARNESS_HPP_
#define SSCARD_SIM_HARNESS_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sscard/core_model.hpp"
#include "sscard/estimation.hpp"
#include "sscard/params.hpp"
#include "sscard/sampling.hpp"
#include "sscard/tail_asymptotics.hpp"
#include "sscard/trig_moments.hpp"

namespace sscard {

enum class Experiment { table1, table2, ev_convergence, tail_remainder, cf_check };

[[nodiscard]] inline const char* to_string(Experiment e) noexcept {
  switch (e) {
    case Experiment::table1: return "table1";
    case Experiment::table2: return "table2";
    case Experiment::ev_convergence: return "ev_convergence";
    case Experiment::tail_remainder: return "tail_remainder";
    case Experiment::cf_check: return "cf_check";
  }
  return "unknown";
}

[[nodiscard]] inline Experiment parse_experiment(std::string_view name) {
  for (const auto e : {Experiment::table1, Experiment::table2, Experiment::ev_convergence,
                       Experiment::tail_remainder, Experiment::cf_check}) {
    if (name == to_string(e)) return e;
  }
  throw domain_error("unknown experiment '" + std::string(name) + "'");
}

enum class BlockMaximaMethod { order_statistic, direct };

/// Everything an experiment needs. Empty grid / sizes / t_grid and a zero
/// replicate count mean "use the experiment's default"; resolve() fills them in.
struct SimConfig {
  Experiment experiment = Experiment::table1;
  std::vector<SscParams> param_grid;
  std::vector<std::int64_t> sizes;
  int replicates = 0;
  std::uint64_t seed = 20180607;
  InversionConfig inversion;
  std::string output_path;
  int order = tail_max_order;                        // tail_remainder
  std::vector<double> t_grid;                        // tail_remainder / cf_check
  BlockMaximaMethod ev_method = BlockMaximaMethod::order_statistic;
};

/// The 7 x 7 grid {-0.9, -0.6, ..., 0.9}^2.
[[nodiscard]] inline std::vector<SscParams> default_param_grid() {
  std::vector<SscParams> grid;
  for (int i = -3; i <= 3; ++i) {
    for (int j = -3; j <= 3; ++j) grid.emplace_back(0.3 * i, 0.3 * j);
  }
  return grid;
}

/// Parameter pairs of the generator-validation table.
[[nodiscard]] inline std::vector<SscParams> table1_param_grid() {
  const double rhos[] = {-0.9, -0.6, -0.3, 0.1, 0.4, 0.7, 0.9};
  std::vector<SscParams> grid;
  for (const double r : rhos) grid.emplace_back(0.9, r);
  for (auto it = std::rbegin(rhos); it != std::rend(rhos); ++it) grid.emplace_back(-0.9, *it);
  return grid;
}

[[nodiscard]] inline std::vector<SscParams> ev_param_grid() {
  std::vector<SscParams> grid;
  for (const double l : {-0.9, 0.0, 0.9}) {
    for (const double r : {-0.5, 0.0, 0.5}) grid.emplace_back(l, r);
  }
  return grid;
}

/// t = -3.0, -2.9, ..., 3.0; integers are hit exactly.
[[nodiscard]] inline std::vector<double> cf_t_grid() {
  std::vector<double> ts;
  for (int i = -30; i <= 30; ++i) ts.push_back(i / 10.0);
  return ts;
}

[[nodiscard]] inline SimConfig resolve(SimConfig cfg) {
  switch (cfg.experiment) {
    case Experiment::table1:
      if (cfg.param_grid.empty()) cfg.param_grid = table1_param_grid();
      if (cfg.sizes.empty()) cfg.sizes = {1000};
      if (cfg.replicates == 0) cfg.replicates = 1;
      break;
    case Experiment::table2:
      if (cfg.param_grid.empty()) cfg.param_grid = {SscParams(-0.9, -0.9)};
      if (cfg.sizes.empty()) cfg.sizes = {10, 50, 100, 200, 300, 400, 500, 750, 1000};
      if (cfg.replicates == 0) cfg.replicates = 200;
      break;
    case Experiment::ev_convergence:
      if (cfg.param_grid.empty()) cfg.param_grid = ev_param_grid();
      if (cfg.sizes.empty()) cfg.sizes = {100, 1000, 10000};
      if (cfg.replicates == 0) cfg.replicates = 2000;
      break;
    case Experiment::tail_remainder:
      if (cfg.param_grid.empty()) cfg.param_grid = default_param_grid();
      if (cfg.t_grid.empty()) cfg.t_grid = {0.2, 0.1, 0.05, 0.025};
      if (cfg.replicates == 0) cfg.replicates = 1;
      break;
    case Experiment::cf_check:
      if (cfg.param_grid.empty()) cfg.param_grid = default_param_grid();
      if (cfg.t_grid.empty()) cfg.t_grid = cf_t_grid();
      if (cfg.replicates == 0) cfg.replicates = 1;
      break;
  }
  if (cfg.param_grid.empty()) throw domain_error("SimConfig: empty parameter grid");
  if (cfg.replicates < 1) throw domain_error("SimConfig: replicates must be >= 1");
  for (const auto n : cfg.sizes) {
    if (n < 1) throw domain_error("SimConfig: sizes must be >= 1");
  }
  if (cfg.order < 1 || cfg.order > tail_max_order) throw domain_error("SimConfig: order must be in 1..6");
  cfg.inversion.validate();
  return cfg;
}

using Cell = std::variant<std::int64_t, double, std::string>;

/// Column-named table; one per experiment, written as CSV.
struct SimReport {
  Experiment experiment = Experiment::table1;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  [[nodiscard]] std::size_t column(std::string_view name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw domain_error("SimReport: no column '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - columns.begin());
  }

  /// Numeric cell; NaN for text or empty cells.
  [[nodiscard]] double number(std::size_t row, std::string_view name) const {
    const Cell& cell = rows.at(row).at(column(name));
    if (const auto* d = std::get_if<double>(&cell)) return *d;
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return static_cast<double>(*i);
    return std::nan("");
  }

  [[nodiscard]] std::string text(std::size_t row, std::string_view name) const {
    const Cell& cell = rows.at(row).at(column(name));
    if (const auto* s = std::get_if<std::string>(&cell)) return *s;
    return {};
  }
};

namespace detail {

inline void write_cell(std::ostream& out, const Cell& cell) {
  char buffer[64];
  if (const auto* d = std::get_if<double>(&cell)) {
    if (std::isnan(*d)) return;
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, *d);
    out.write(buffer, end - buffer);
  } else if (const auto* i = std::get_if<std::int64_t>(&cell)) {
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, *i);
    out.write(buffer, end - buffer);
  } else {
    out << std::get<std::string>(cell);
  }
}

inline double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (const double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double raw_second_moment(const std::vector<double>& v) {
  double s = 0.0;
  for (const double x : v) s += x * x;
  return s / static_cast<double>(v.size());
}

}  // namespace detail

/// Header row then one line per record; '.' decimals, shortest round-trip
/// formatting, '\n' line ends. NaN cells are written empty.
inline void write_csv(std::ostream& out, const SimReport& report) {
  for (std::size_t c = 0; c < report.columns.size(); ++c) {
    if (c) out.put(',');
    out << report.columns[c];
  }
  out.put('\n');
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out.put(',');
      detail::write_cell(out, row[c]);
    }
    out.put('\n');
  }
}

/// Least-squares slope of log(y) against log(x).
[[nodiscard]] inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw domain_error("loglog_slope: need >= 2 paired points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const auto n = static_cast<double>(x.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// Generator validation: exact vs empirical mean and raw second moment.
/// Row i uses seed derive_seed(cfg.seed, i); the quotient is exact m2 / empirical m2.
[[nodiscard]] inline SimReport run_table1(const SimConfig& config) {
  const SimConfig cfg = resolve(config);
  SimReport report{Experiment::table1,
                   {"lambda", "rho", "n", "exact_mean", "empirical_mean", "exact_m2", "empirical_m2",
                    "quotient", "se_mean", "se_m2"},
                   {}};
  const std::int64_t n = cfg.sizes.front();
  for (std::size_t i = 0; i < cfg.param_grid.size(); ++i) {
    const SscParams& p = cfg.param_grid[i];
    const auto batch = sample(p, n, derive_seed(cfg.seed, i), cfg.inversion);
    const MomentSet m = moment_set(p);
    const double empirical_mean = detail::mean_of(batch.values);
    const double empirical_m2 = detail::raw_second_moment(batch.values);
    const double var_x = m.raw(2) - m.raw(1) * m.raw(1);
    const auto nn = static_cast<double>(n);
    report.rows.push_back({p.lambda(), p.rho(), n, m.raw(1), empirical_mean, m.raw(2), empirical_m2,
                           m.raw(2) / empirical_m2, std::sqrt(var_x / nn), std::sqrt(m.var_x2 / nn)});
  }
  return report;
}

/// Estimator error curves: MAE and RMSE of the raw estimates over replicates.
/// Replicate r at size index s of grid point g draws with seed
/// derive_seed(derive_seed(derive_seed(cfg.seed, g), s), r).
[[nodiscard]] inline SimReport run_table2(const SimConfig& config) {
  const SimConfig cfg = resolve(config);
  SimReport report{Experiment::table2,
                   {"lambda", "rho", "n", "replicates", "mae_lambda", "rmse_lambda", "mae_rho", "rmse_rho",
                    "predicted_rmse_lambda", "predicted_rmse_rho"},
                   {}};
  for (std::size_t g = 0; g < cfg.param_grid.size(); ++g) {
    const SscParams& p = cfg.param_grid[g];
    const Matrix2 sigma = asymptotic_covariance(p);
    const std::uint64_t point_seed = derive_seed(cfg.seed, g);
    for (std::size_t s = 0; s < cfg.sizes.size(); ++s) {
      const std::int64_t n = cfg.sizes[s];
      if (n < 2) throw domain_error("run_table2: sample sizes must be >= 2");
      const std::uint64_t size_seed = derive_seed(point_seed, s);
      double abs_l = 0.0, sq_l = 0.0, abs_r = 0.0, sq_r = 0.0;
      for (int r = 0; r < cfg.replicates; ++r) {
        const auto batch = sample(p, n, derive_seed(size_seed, static_cast<std::uint64_t>(r)), cfg.inversion);
        const auto est = estimate(batch.values);
        const double el = est.lambda_hat - p.lambda();
        const double er = est.rho_hat - p.rho();
        abs_l += std::abs(el);
        sq_l += el * el;
        abs_r += std::abs(er);
        sq_r += er * er;
      }
      const double reps = cfg.replicates;
      const auto nn = static_cast<double>(n);
      report.rows.push_back({p.lambda(), p.rho(), n, static_cast<std::int64_t>(cfg.replicates), abs_l / reps,
                             std::sqrt(sq_l / reps), abs_r / reps, std::sqrt(sq_r / reps),
                             std::sqrt(sigma[1][1] / nn), std::sqrt(sigma[0][0] / nn)});
    }
  }
  return report;
}

/// sup_x |P(rate (X_{n,n} - pi) <= x) - G(x)| evaluated from the exact finite-n law
/// F(pi + x / rate)^n on a dense grid of x in [-30, 0].
[[nodiscard]] inline double exact_maximum_ks(const SscParams& p, std::int64_t n, double rate) {
  double d = 0.0;
  constexpr int points = 6000;
  for (int i = 0; i <= points; ++i) {
    const double x = -30.0 * i / points;
    const double at = pi + x / rate;
    const double law = at <= -pi ? 0.0 : std::exp(static_cast<double>(n) * std::log1p(-survival(p, at)));
    d = std::max(d, std::abs(law - weibull_limit_cdf(x)));
  }
  return d;
}

/// Normalized block maxima rate (X_{n,n} - pi), and minima in the composed form
/// rate (-X_{1,n} - pi), against G(x) = exp(x) 1{x <= 0}.
///
/// Replicate r of grid point g uses UniformStream(derive_seed(derive_seed(seed, g), r))
/// for every n, so the sizes share random numbers and their KS distances are
/// directly comparable.
[[nodiscard]] inline SimReport run_ev_convergence(const SimConfig& config) {
  const SimConfig cfg = resolve(config);
  SimReport report{Experiment::ev_convergence,
                   {"lambda", "rho", "side", "n", "replicates", "rate", "ks", "ks_exact_law"},
                   {}};
  for (std::size_t g = 0; g < cfg.param_grid.size(); ++g) {
    const SscParams& p = cfg.param_grid[g];
    const std::uint64_t point_seed = derive_seed(cfg.seed, g);
    for (const auto n : cfg.sizes) {
      const EvNormalization norm = ev_normalization(p, n);
      std::vector<double> maxima;
      std::vector<double> minima;
      maxima.reserve(static_cast<std::size_t>(cfg.replicates));
      minima.reserve(static_cast<std::size_t>(cfg.replicates));
      for (int r = 0; r < cfg.replicates; ++r) {
        UniformStream uniform(derive_seed(point_seed, static_cast<std::uint64_t>(r)));
        double hi = -pi;
        double lo = pi;
        if (cfg.ev_method == BlockMaximaMethod::direct) {
          for (std::int64_t i = 0; i < n; ++i) {
            const double x = quantile(p, uniform(), cfg.inversion);
            hi = std::max(hi, x);
            lo = std::min(lo, x);
          }
        } else {
          hi = sample_block_maximum(p, n, uniform, cfg.inversion);
          lo = sample_block_minimum(p, n, uniform, cfg.inversion);
        }
        maxima.push_back(norm.rate * (hi - pi));
        minima.push_back(norm.rate * (-lo - pi));
      }
      const double ks_max = ks_distance(maxima, weibull_limit_cdf);
      const double ks_min = ks_distance(minima, weibull_limit_cdf);
      report.rows.push_back({p.lambda(), p.rho(), std::string("max"), n,
                             static_cast<std::int64_t>(cfg.replicates), norm.rate, ks_max,
                             exact_maximum_ks(p, n, norm.rate)});
      report.rows.push_back({p.lambda(), p.rho(), std::string("min"), n,
                             static_cast<std::int64_t>(cfg.replicates), norm.rate, ks_min,
                             exact_maximum_ks(p.mirrored(), n, norm.rate)});
    }
  }
  return report;
}

/// Order-k remainder of the tail series at each t, scaled by t^(k+1), and the
/// ratio of successive scaled values as t shrinks down the grid.
[[nodiscard]] inline SimReport run_tail_remainder(const SimConfig& config) {
  const SimConfig cfg = resolve(config);
  SimReport report{Experiment::tail_remainder,
                   {"side", "lambda", "rho", "order", "t", "remainder", "scaled_remainder", "halving_ratio",
                    "next_coefficient"},
                   {}};
  for (const TailSide side : {TailSide::upper, TailSide::lower}) {
    for (const SscParams& p : cfg.param_grid) {
      std::vector<double> scaled;
      std::vector<double> remainders;
      for (const double t : cfg.t_grid) {
        const long double r = tail_remainder(p, side, t, cfg.order);
        remainders.push_back(static_cast<double>(r));
        scaled.push_back(static_cast<double>(std::abs(r) / std::pow(static_cast<long double>(t), cfg.order + 1)));
      }
      const double next = tail_series_coefficient(p, side, cfg.order + 1);
      for (std::size_t i = 0; i < cfg.t_grid.size(); ++i) {
        double ratio = std::nan("");
        if (i + 1 < scaled.size() && scaled[i + 1] > 0.0) ratio = scaled[i] / scaled[i + 1];
        report.rows.push_back({std::string(to_string(side)), p.lambda(), p.rho(),
                               static_cast<std::int64_t>(cfg.order), cfg.t_grid[i], remainders[i], scaled[i],
                               ratio, next});
      }
    }
  }
  return report;
}

/// E cos(tX) and E sin(tX) by adaptive Gauss-Kronrod quadrature of the density.
[[nodiscard]] inline ComplexValue cf_by_quadrature(const SscParams& p, double t) {
  using boost::math::quadrature::gauss_kronrod;
  const auto re = gauss_kronrod<double, 61>::integrate(
      [&](double x) { return std::cos(t * x) * pdf(p, x); }, -pi, pi, 6, 1e-14);
  const auto im = gauss_kronrod<double, 61>::integrate(
      [&](double x) { return std::sin(t * x) * pdf(p, x); }, -pi, pi, 6, 1e-14);
  return {re, im};
}

[[nodiscard]] inline SimReport run_cf_check(const SimConfig& config) {
  const SimConfig cfg = resolve(config);
  SimReport report{Experiment::cf_check,
                   {"lambda", "rho", "t", "re", "im", "quadrature_re", "quadrature_im", "abs_error", "modulus"},
                   {}};
  for (const SscParams& p : cfg.param_grid) {
    for (const double t : cfg.t_grid) {
      const ComplexValue closed = cf(p, t);
      const ComplexValue quad = cf_by_quadrature(p, t);
      report.rows.push_back({p.lambda(), p.rho(), t, closed.real(), closed.imag(), quad.real(), quad.imag(),
                             std::abs(closed - quad), std::abs(closed)});
    }
  }
  return report;
}

[[nodiscard]] inline SimReport run(const SimConfig& cfg) {
  switch (cfg.experiment) {
    case Experiment::table1: return run_table1(cfg);
    case Experiment::table2: return run_table2(cfg);
    case Experiment::ev_convergence: return run_ev_convergence(cfg);
    case Experiment::tail_remainder: return run_tail_remainder(cfg);
    case Experiment::cf_check: return run_cf_check(cfg);
  }
  throw domain_error("run: unknown experiment");
}

// Config files and list syntax.

namespace detail {

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <class T>
T parse_number(std::string_view text, const char* what) {
  const std::string s = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw domain_error(std::string(what) + ": cannot parse '" + s + "'");
  }
  return value;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = s.find(sep, start);
    const auto piece = trim(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (!piece.empty()) parts.push_back(piece);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

}  // namespace detail

/// "10,50,100"
[[nodiscard]] inline std::vector<std::int64_t> parse_sizes(std::string_view text) {
  std::vector<std::int64_t> sizes;
  for (const auto& part : detail::split(text, ',')) sizes.push_back(detail::parse_number<std::int64_t>(part, "sizes"));
  return sizes;
}

/// "0.2,0.1,0.05"
[[nodiscard]] inline std::vector<double> parse_reals(std::string_view text) {
  std::vector<double> values;
  for (const auto& part : detail::split(text, ',')) values.push_back(detail::parse_number<double>(part, "list"));
  return values;
}

/// "lambda:rho,lambda:rho", e.g. "0.9:-0.9,-0.9:0.9"
[[nodiscard]] inline std::vector<SscParams> parse_param_grid(std::string_view text) {
  std::vector<SscParams> grid;
  for (const auto& pair : detail::split(text, ',')) {
    const auto fields = detail::split(pair, ':');
    if (fields.size() != 2) throw domain_error("grid: expected lambda:rho, got '" + pair + "'");
    grid.emplace_back(detail::parse_number<double>(fields[0], "grid"), detail::parse_number<double>(fields[1], "grid"));
  }
  return grid;
}

/// key = value lines; '#' starts a comment. Later keys override earlier ones.
[[nodiscard]] inline std::map<std::string, std::string> parse_key_values(std::istream& in) {
  std::map<std::string, std::string> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = detail::trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw domain_error("config line " + std::to_string(line_no) + ": expected key = value");
    }
    entries[detail::trim(std::string_view(body).substr(0, eq))] = detail::trim(std::string_view(body).substr(eq + 1));
  }
  return entries;
}

/// Applies recognised keys: experiment, grid, lambda, rho, sizes, replicates,
/// seed, decimals, tol, max_iter, out, order, t_grid, ev_method.
/// lambda and rho together replace the grid with a single point.
inline void apply_settings(SimConfig& cfg, const std::map<std::string, std::string>& entries) {
  std::optional<double> lambda;
  std::optional<double> rho;
  for (const auto& [key, value] : entries) {
    if (key == "experiment") {
      cfg.experiment = parse_experiment(value);
    } else if (key == "grid") {
      cfg.param_grid = parse_param_grid(value);
    } else if (key == "lambda") {
      lambda = detail::parse_number<double>(value, "lambda");
    } else if (key == "rho") {
      rho = detail::parse_number<double>(value, "rho");
    } else if (key == "sizes") {
      cfg.sizes = parse_sizes(value);
    } else if (key == "replicates") {
      cfg.replicates = detail::parse_number<int>(value, "replicates");
    } else if (key == "seed") {
      cfg.seed = detail::parse_number<std::uint64_t>(value, "seed");
    } else if (key == "decimals") {
      cfg.inversion.mode = InversionMode::digit_refinement;
      cfg.inversion.nbr_dec = detail::parse_number<int>(value, "decimals");
    } else if (key == "tol") {
      cfg.inversion.mode = InversionMode::bracket_bisection;
      cfg.inversion.abs_tol = detail::parse_number<double>(value, "tol");
    } else if (key == "max_iter") {
      cfg.inversion.max_iter = detail::parse_number<int>(value, "max_iter");
    } else if (key == "out") {
      cfg.output_path = value;
    } else if (key == "order") {
      cfg.order = detail::parse_number<int>(value, "order");
    } else if (key == "t_grid") {
      cfg.t_grid = parse_reals(value);
    } else if (key == "ev_method") {
      if (value == "direct") {
        cfg.ev_method = BlockMaximaMethod::direct;
      } else if (value == "order_statistic") {
        cfg.ev_method = BlockMaximaMethod::order_statistic;
      } else {
        throw domain_error("ev_method must be direct or order_statistic");
      }
    } else {
      throw domain_error("unknown config key '" + key + "'");
    }
  }
  if (lambda.has_value() != rho.has_value()) throw domain_error("lambda and rho must be given together");
  if (lambda) cfg.param_grid = {SscParams(*lambda, *rho)};
}

}  // namespace sscard

#endif  // SSCARD_SIM_HARNESS_HPP_
