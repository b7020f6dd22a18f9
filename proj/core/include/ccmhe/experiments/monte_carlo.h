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
#ifndef CCMHE_EXPERIMENTS_MONTE_CARLO_H_
#define CCMHE_EXPERIMENTS_MONTE_CARLO_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ccmhe/config.h"
#include "ccmhe/ekf.h"
#include "ccmhe/mhe.h"

namespace ccmhe::experiments {

// One synthetic run of both estimators on identical noisy readings.
struct ScenarioResult {
  std::vector<double> times;
  std::vector<RobotState> truth;
  std::vector<Measurement> measurements;
  mhe::SlidingResult mhe;
  ekf::FilterResult ekf;
  // Both estimators are scored on samples [eval_begin, eval_end), which is
  // where the MHE has estimates.
  int eval_begin = 0;
  int eval_end = 0;
  double srmse_mhe = 0.0;
  double srmse_ekf = 0.0;
  std::uint64_t seed = 0;
};

ScenarioResult run_scenario(const EstimatorConfig& config,
                            const ScenarioSpec& noise, std::uint64_t seed);

// Seed used for scenario `index`: the explicit one if given, otherwise
// derive_seed(config.seed, index).
std::uint64_t scenario_seed(const EstimatorConfig& config,
                            const ScenarioSpec& spec, std::size_t index);

struct MonteCarloRow {
  int scenario = 0;  // 1-based
  double sigma_beta = 0.0;
  double sigma_gamma = 0.0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  double srmse_mhe = 0.0;
  double srmse_ekf = 0.0;
  int solve_count = 0;
  double mean_solve_seconds = 0.0;
};

// Runs config.montecarlo in parallel (config.threads workers). A failing
// scenario yields a row with ok == false instead of aborting the batch.
// Throws ValidationError when there are no scenarios.
std::vector<MonteCarloRow> run_monte_carlo(const EstimatorConfig& config);

}  // namespace ccmhe::experiments

#endif  // CCMHE_EXPERIMENTS_MONTE_CARLO_H_
