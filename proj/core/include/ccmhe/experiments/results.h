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
#ifndef CCMHE_EXPERIMENTS_RESULTS_H_
#define CCMHE_EXPERIMENTS_RESULTS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccmhe/config.h"
#include "ccmhe/ekf.h"
#include "ccmhe/experiments/horizon_sweep.h"
#include "ccmhe/experiments/monte_carlo.h"
#include "ccmhe/mhe.h"

// Result tables (CSV) and run documents (JSON). Every document embeds the
// full effective configuration. Wall-clock values live in columns named
// "*_seconds" and under "timing" keys; everything else is a deterministic
// function of configuration, inputs and seed.
namespace ccmhe::experiments {

inline constexpr const char* kNoiseInterpretation =
    "noise levels are Gaussian standard deviations in radians; the magnitude "
    "of each configured value is used and its sign is discarded";

std::string montecarlo_csv(std::span<const MonteCarloRow> rows);
std::string montecarlo_json(std::span<const MonteCarloRow> rows,
                            const EstimatorConfig& config);

std::string horizon_sweep_csv(std::span<const HorizonRow> rows);
std::string horizon_sweep_json(std::span<const HorizonRow> rows,
                               const EstimatorConfig& config);

// Estimator output over a measurement log. Samples without an MHE estimate
// are marked with mhe_valid = 0 and empty fields.
struct EstimateRun {
  std::vector<double> times;
  std::vector<Measurement> measurements;
  std::optional<mhe::SlidingResult> mhe;
  std::optional<ekf::FilterResult> ekf;
  // Optional reference trajectory aligned with `times`.
  std::optional<std::vector<RobotState>> truth;
  // Filled by score() when truth is present.
  std::optional<double> srmse_mhe;
  std::optional<double> srmse_ekf;
  int eval_begin = 0;
  int eval_end = 0;

  // Scores both estimators on the MHE support (or all samples for EKF-only
  // runs).
  void score(SrmseComponents components);
};

std::string estimate_csv(const EstimateRun& run);
std::string estimate_json(const EstimateRun& run, const EstimatorConfig& config,
                          const std::string& source);

// `files` lists the written logs relative to the output directory.
std::string generate_json(const EstimatorConfig& config, std::uint64_t seed,
                          int samples, std::span<const std::string> files);

}  // namespace ccmhe::experiments

#endif  // CCMHE_EXPERIMENTS_RESULTS_H_
