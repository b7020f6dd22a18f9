// Copyright 2026 The ccmhe Authors
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

#include "ccmhe_cli/commands.h"

#include <cmath>
#include <exception>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccmhe/errors.h"
#include "ccmhe/experiments/horizon_sweep.h"
#include "ccmhe/experiments/measurement_log.h"
#include "ccmhe/experiments/monte_carlo.h"
#include "ccmhe/experiments/noise.h"
#include "ccmhe/experiments/results.h"
#include "ccmhe/experiments/trajectory.h"

namespace ccmhe::cli {
namespace {

namespace ex = ccmhe::experiments;
namespace fs = std::filesystem;

void write(const fs::path& path, const std::string& text, std::ostream& log) {
  ex::write_text_file(path, text);
  log << "wrote " << path.string() << '\n';
}

std::string scenario_file(std::size_t index) {
  const std::string n = std::to_string(index + 1);
  return "scenarios/scenario_" + std::string(n.size() < 2 ? "0" : "") + n +
         ".csv";
}

}  // namespace

EstimatorConfig effective_config(const CommonOptions& options) {
  EstimatorConfig config;
  if (options.config_path) {
    config = load_config(*options.config_path, options.degrees);
  }
  if (options.seed) config.seed = *options.seed;
  config.validate();
  return config;
}

void cmd_generate(const CommonOptions& options, std::ostream& log) {
  const EstimatorConfig config = effective_config(options);
  const int m = config.trajectory.samples;
  const ex::Trajectory traj =
      ex::generate_trajectory(config.trajectory, m, config.dt, config.length);
  const fs::path& dir = options.out_dir;

  std::vector<std::string> files{"truth.csv", "clean.csv", "noisy.csv"};
  write(dir / "truth.csv", ex::format_state_log(traj.times, traj.truth), log);
  write(dir / "clean.csv", ex::format_measurement_log(traj.times, traj.clean),
        log);
  const std::vector<Measurement> noisy =
      ex::add_noise(traj.clean, config.noise.sigma_beta,
                    config.noise.sigma_gamma,
                    ex::scenario_seed(config, config.noise, 0));
  write(dir / "noisy.csv", ex::format_measurement_log(traj.times, noisy), log);

  for (std::size_t i = 0; i < config.montecarlo.size(); ++i) {
    const ScenarioSpec& spec = config.montecarlo[i];
    const std::vector<Measurement> z =
        ex::add_noise(traj.clean, spec.sigma_beta, spec.sigma_gamma,
                      ex::scenario_seed(config, spec, i));
    files.push_back(scenario_file(i));
    write(dir / files.back(), ex::format_measurement_log(traj.times, z), log);
  }
  write(dir / "generate.json", ex::generate_json(config, config.seed, m, files),
        log);
}

void cmd_estimate(const CommonOptions& options,
                  const fs::path& measurements, EstimatorChoice estimator,
                  const std::optional<fs::path>& truth, std::ostream& log) {
  EstimatorConfig config = effective_config(options);
  const ex::MeasurementLog input =
      ex::read_measurement_log(measurements, options.degrees);
  // A log sampled at a different rate than configured wins; agreement to
  // rounding keeps the configured value so replays match generated data.
  if (input.times.size() >= 2) {
    const double dt = input.sample_time();
    if (std::abs(dt - config.dt) > 1e-6 * config.dt) config.dt = dt;
  }

  ex::EstimateRun run;
  run.times = input.times;
  run.measurements = input.measurements;
  if (estimator != EstimatorChoice::kEkf) {
    run.mhe = mhe::run_sliding(input.measurements, config.mhe_config());
  }
  if (estimator != EstimatorChoice::kMhe) {
    run.ekf = ekf::run_filter(input.measurements, config.ekf_config());
  }
  if (truth) {
    run.truth = ex::read_state_log(*truth).states;
    run.score(config.srmse_components);
  }

  write(options.out_dir / "estimate.csv", ex::estimate_csv(run), log);
  write(options.out_dir / "estimate.json",
        ex::estimate_json(run, config, measurements.string()), log);
  if (run.srmse_mhe) log << "srmse mhe " << *run.srmse_mhe << '\n';
  if (run.srmse_ekf) log << "srmse ekf " << *run.srmse_ekf << '\n';
}

bool cmd_montecarlo(const CommonOptions& options, std::ostream& log) {
  const EstimatorConfig config = effective_config(options);
  const std::vector<ex::MonteCarloRow> rows = ex::run_monte_carlo(config);
  write(options.out_dir / "montecarlo.csv", ex::montecarlo_csv(rows), log);
  write(options.out_dir / "montecarlo.json", ex::montecarlo_json(rows, config),
        log);
  bool all_ok = true;
  for (const ex::MonteCarloRow& r : rows) {
    if (!r.ok) {
      all_ok = false;
      log << "scenario " << r.scenario << " failed: " << r.error << '\n';
    }
  }
  return all_ok;
}

bool cmd_horizon_sweep(const CommonOptions& options, std::ostream& log) {
  const EstimatorConfig config = effective_config(options);
  const std::vector<ex::HorizonRow> rows = ex::run_horizon_sweep(config);
  write(options.out_dir / "horizon_sweep.csv", ex::horizon_sweep_csv(rows), log);
  write(options.out_dir / "horizon_sweep.json",
        ex::horizon_sweep_json(rows, config), log);
  bool all_ok = true;
  for (const ex::HorizonRow& r : rows) {
    if (!r.ok) {
      all_ok = false;
      log << "horizon " << r.horizon << " failed: " << r.error << '\n';
    }
  }
  return all_ok;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Moving horizon and EKF shape estimation for continuum robots",
               "ccmhe"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON configuration file");
    sub->add_option("--out", out_dir, "Output directory");
    sub->add_option("--seed", seed, "Master seed (overrides the config)");
    sub->add_flag("--degrees", common.degrees,
                  "Angles in config and logs are in degrees");
  };

  CLI::App* generate = app.add_subcommand("generate", "Write synthetic logs");
  add_common(generate);

  CLI::App* estimate =
      app.add_subcommand("estimate", "Run estimators on a measurement log");
  add_common(estimate);
  std::string log_path;
  std::string truth_path;
  std::string estimator_name = "both";
  const std::map<std::string, EstimatorChoice> choices{
      {"mhe", EstimatorChoice::kMhe},
      {"ekf", EstimatorChoice::kEkf},
      {"both", EstimatorChoice::kBoth}};
  estimate->add_option("log", log_path, "Measurement log (t,gamma,beta)")
      ->required();
  estimate->add_option("--estimator", estimator_name, "mhe, ekf or both")
      ->check(CLI::IsMember({"mhe", "ekf", "both"}));
  estimate->add_option("--truth", truth_path,
                       "Reference state log (t,x,y,z,theta,phi)");

  CLI::App* montecarlo =
      app.add_subcommand("montecarlo", "Run the noise-scenario comparison");
  add_common(montecarlo);
  CLI::App* sweep =
      app.add_subcommand("horizon-sweep", "Run MHE over a list of horizons");
  add_common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0 through the same path.
    return app.exit(e, out, err) == 0 ? kSuccess : kValidation;
  }

  for (CLI::App* sub : app.get_subcommands()) {
    if (sub->count("--config") > 0) common.config_path = config_path;
    if (sub->count("--seed") > 0) common.seed = seed;
  }
  common.out_dir = out_dir;

  try {
    bool ok = true;
    if (generate->parsed()) {
      cmd_generate(common, out);
    } else if (estimate->parsed()) {
      cmd_estimate(common, log_path, choices.at(estimator_name),
                   truth_path.empty() ? std::nullopt
                                      : std::optional<fs::path>(truth_path),
                   out);
    } else if (montecarlo->parsed()) {
      ok = cmd_montecarlo(common, out);
    } else if (sweep->parsed()) {
      ok = cmd_horizon_sweep(common, out);
    }
    return ok ? kSuccess : kNumeric;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const NumericFailure& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  }
}

}  // namespace ccmhe::cli
