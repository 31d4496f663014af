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

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sscard/sscard.hpp"

namespace {

// Flag values collected as text so they overlay config-file entries key by key.
struct ExperimentFlags {
  std::string config_path;
  std::map<std::string, std::string> overrides;
};

void add_text_flag(CLI::App* cmd, ExperimentFlags& flags, const std::string& name, const std::string& key,
                   const std::string& help) {
  cmd->add_option_function<std::string>(
      name, [&flags, key](const std::string& v) { flags.overrides[key] = v; }, help);
}

void add_experiment_flags(CLI::App* cmd, ExperimentFlags& flags) {
  cmd->add_option("--config", flags.config_path, "key=value config file; flags override it")
      ->check(CLI::ExistingFile);
  add_text_flag(cmd, flags, "--lambda", "lambda", "single-point lambda (needs --rho)");
  add_text_flag(cmd, flags, "--rho", "rho", "single-point rho (needs --lambda)");
  add_text_flag(cmd, flags, "--grid", "grid", "parameter grid, lambda:rho pairs separated by commas");
  add_text_flag(cmd, flags, "--sizes", "sizes", "comma-separated sample sizes");
  add_text_flag(cmd, flags, "--replicates", "replicates", "replicates per configuration");
  add_text_flag(cmd, flags, "--seed", "seed", "base seed");
  add_text_flag(cmd, flags, "--decimals", "decimals", "digit-refinement inversion with this many decimals");
  add_text_flag(cmd, flags, "--tol", "tol", "bisection inversion with this cdf tolerance");
  add_text_flag(cmd, flags, "--max-iter", "max_iter", "inversion iteration cap");
  add_text_flag(cmd, flags, "--out", "out", "output CSV path (default: stdout)");
  add_text_flag(cmd, flags, "--order", "order", "tail expansion order (tail_remainder)");
  add_text_flag(cmd, flags, "--t-grid", "t_grid", "comma-separated t values (tail_remainder, cf_check)");
  add_text_flag(cmd, flags, "--ev-method", "ev_method", "order_statistic or direct (ev_convergence)");
}

void print_summary(const sscard::SimReport& report) {
  using sscard::Experiment;
  if (report.experiment == Experiment::cf_check) {
    double worst = 0.0;
    for (std::size_t i = 0; i < report.rows.size(); ++i) worst = std::max(worst, report.number(i, "abs_error"));
    std::cerr << "cf_check: max |closed form - quadrature| = " << worst << "\n";
  } else if (report.experiment == Experiment::table2 && report.rows.size() >= 2) {
    std::vector<double> n, rmse_l, rmse_r;
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      n.push_back(report.number(i, "n"));
      rmse_l.push_back(report.number(i, "rmse_lambda"));
      rmse_r.push_back(report.number(i, "rmse_rho"));
    }
    std::cerr << "table2: log-log RMSE slope lambda " << sscard::loglog_slope(n, rmse_l) << ", rho "
              << sscard::loglog_slope(n, rmse_r) << "\n";
  }
}

int run_experiment(sscard::Experiment experiment, const ExperimentFlags& flags) {
  sscard::SimConfig cfg;
  cfg.experiment = experiment;
  std::map<std::string, std::string> settings;
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    settings = sscard::parse_key_values(in);
    if (const auto it = settings.find("experiment"); it != settings.end() && it->second != to_string(experiment)) {
      throw sscard::domain_error("config file is for experiment '" + it->second + "'");
    }
  }
  for (const auto& [key, value] : flags.overrides) settings[key] = value;
  sscard::apply_settings(cfg, settings);

  const sscard::SimReport report = sscard::run(cfg);
  if (cfg.output_path.empty()) {
    sscard::write_csv(std::cout, report);
  } else {
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + cfg.output_path);
    sscard::write_csv(out, report);
  }
  print_summary(report);
  return 0;
}

std::vector<double> read_input(const std::string& path) {
  if (path == "-") return sscard::read_values(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return sscard::read_values(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sine-skewed cardioid distribution: sampling, estimation and simulation reports"};
  app.require_subcommand(1);

  std::vector<std::pair<CLI::App*, sscard::Experiment>> experiments;
  std::map<CLI::App*, ExperimentFlags> experiment_flags;
  const std::pair<sscard::Experiment, const char*> described[] = {
      {sscard::Experiment::table1, "exact vs empirical mean and second moment per parameter pair"},
      {sscard::Experiment::table2, "MAE / RMSE of the moment estimators against sample size"},
      {sscard::Experiment::ev_convergence, "KS distance of normalized maxima and minima to the Weibull limit"},
      {sscard::Experiment::tail_remainder, "remainder of the tail series on a t grid, both tails"},
      {sscard::Experiment::cf_check, "closed-form characteristic function against quadrature"},
  };
  for (const auto& [experiment, help] : described) {
    CLI::App* cmd = app.add_subcommand(to_string(experiment), help);
    add_experiment_flags(cmd, experiment_flags[cmd]);
    experiments.emplace_back(cmd, experiment);
  }

  double lambda = 0.0, rho = 0.0;
  std::int64_t n = 1000;
  std::uint64_t seed = 20180607;
  std::optional<int> decimals;
  std::optional<double> tol;
  std::string out_path;
  CLI::App* sample_cmd = app.add_subcommand("sample", "write a seeded sample, one value per line");
  sample_cmd->add_option("--lambda", lambda)->required();
  sample_cmd->add_option("--rho", rho)->required();
  sample_cmd->add_option("--n", n, "sample size")->capture_default_str();
  sample_cmd->add_option("--seed", seed)->capture_default_str();
  auto* dec_opt = sample_cmd->add_option("--decimals", decimals, "digit-refinement inversion");
  sample_cmd->add_option("--tol", tol, "bisection inversion tolerance")->excludes(dec_opt);
  sample_cmd->add_option("--out", out_path, "output path (default: stdout)");

  std::string input_path = "-";
  double level = 0.95;
  CLI::App* estimate_cmd = app.add_subcommand("estimate", "moment estimates with asymptotic covariance and CIs");
  estimate_cmd->add_option("input", input_path, "data file, one value per line ('-' for stdin)");
  estimate_cmd->add_option("--level", level, "confidence level")->capture_default_str();

  int grid_size = 41;
  CLI::App* mle_cmd = app.add_subcommand("mle", "log-likelihood surface diagnostic over [-1, 1]^2");
  mle_cmd->add_option("input", input_path, "data file, one value per line ('-' for stdin)");
  mle_cmd->add_option("--lambda", lambda, "reference lambda");
  mle_cmd->add_option("--rho", rho, "reference rho");
  mle_cmd->add_option("--grid-size", grid_size)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& [cmd, experiment] : experiments) {
      if (cmd->parsed()) return run_experiment(experiment, experiment_flags[cmd]);
    }
    if (sample_cmd->parsed()) {
      sscard::InversionConfig inv;
      if (decimals) inv = sscard::InversionConfig::digits(*decimals);
      if (tol) inv = sscard::InversionConfig::bracket(*tol);
      const auto batch = sscard::sample({lambda, rho}, n, seed, inv);
      if (out_path.empty()) {
        sscard::write_values(std::cout, batch.values);
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        sscard::write_values(out, batch.values);
      }
      return 0;
    }
    if (estimate_cmd->parsed()) {
      const auto data = read_input(input_path);
      const auto res = sscard::confidence_intervals(sscard::estimate(data), level);
      sscard::SimReport table;
      table.columns = {"n", "rho_hat", "lambda_hat", "clamped", "rho_clamped", "lambda_clamped",
                       "sigma_rho_rho", "sigma_rho_lambda", "sigma_lambda_lambda", "ci_level", "ci_rho_lower",
                       "ci_rho_upper", "ci_lambda_lower", "ci_lambda_upper"};
      table.rows.push_back({static_cast<std::int64_t>(res.n), res.rho_hat, res.lambda_hat,
                            static_cast<std::int64_t>(res.clamped), res.rho_clamped, res.lambda_clamped,
                            res.sigma[0][0], res.sigma[0][1], res.sigma[1][1], res.ci_level, res.ci_rho.lower,
                            res.ci_rho.upper, res.ci_lambda.lower, res.ci_lambda.upper});
      sscard::write_csv(std::cout, table);
      return 0;
    }
    if (mle_cmd->parsed()) {
      const auto data = read_input(input_path);
      const auto report = sscard::mle_diagnostic({lambda, rho}, data, grid_size);
      std::cout << "grid_size=" << report.grid_size << "\n"
                << "loglik_at_reference=" << report.loglik_at_reference << "\n"
                << "max_loglik=" << report.max_loglik << "\n"
                << "argmax_lambda=" << report.argmax_lambda << "\n"
                << "argmax_rho=" << report.argmax_rho << "\n"
                << "argmax_on_lambda_boundary=" << report.argmax_on_lambda_boundary << "\n"
                << "argmax_on_rho_boundary=" << report.argmax_on_rho_boundary << "\n"
                << "interior_maximum=" << report.interior_maximum << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
