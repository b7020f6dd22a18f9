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
#ifndef CCMHE_CONFIG_H_
#define CCMHE_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "ccmhe/ekf.h"
#include "ccmhe/experiments/metrics.h"
#include "ccmhe/experiments/trajectory.h"
#include "ccmhe/mhe.h"
#include "ccmhe/solver.h"

namespace ccmhe {

// Noise standard deviations (radians) for one synthetic run. Only the
// magnitude is used. Without an explicit seed one is derived from the master
// seed and the scenario index.
struct ScenarioSpec {
  double sigma_beta = 0.0;
  double sigma_gamma = 0.0;
  std::optional<std::uint64_t> seed;
};

// The ten Monte-Carlo noise scenarios, the sign of each entry is kept as listed.
std::vector<ScenarioSpec> default_scenarios();

// Every tunable of the estimators and experiments. Layering is
// built-in defaults -> JSON document -> command-line overrides.
struct EstimatorConfig {
  double length = 1.0;  // arc length s
  double dt = 0.05;
  int horizon = 30;
  std::uint64_t seed = 42;
  int threads = 0;  // 0 = hardware concurrency

  mhe::Weights weights;
  std::optional<mhe::StateBounds> bounds;
  solver::SolverSettings solver;
  std::size_t input_prefilter_window = 1;
  bool warm_start = true;

  double ekf_initial_covariance = 1e-2;
  Vector5d ekf_process_noise = Vector5d::Constant(1e-4);
  Eigen::Vector2d ekf_measurement_noise = Eigen::Vector2d::Constant(1e-3);

  experiments::TrajectorySpec trajectory;
  ScenarioSpec noise;
  std::vector<ScenarioSpec> montecarlo = default_scenarios();
  std::vector<int> sweep_horizons{10, 20, 30, 40, 50, 60};
  experiments::SrmseComponents srmse_components =
      experiments::SrmseComponents::kFullState;

  mhe::MheConfig mhe_config() const;
  mhe::MheConfig mhe_config(int horizon) const;
  ekf::EkfConfig ekf_config() const;

  // Throws ValidationError describing the first violated constraint.
  void validate() const;
};

// Pretty-printed JSON of the full effective configuration (radians).
std::string config_to_json(const EstimatorConfig& config);

// Overlays the keys present in `text` onto `base`. With `degrees`, angle
// valued fields in the document are read as degrees (variances as deg^2).
// Unknown keys and type mismatches raise ValidationError; the result is
// validated.
EstimatorConfig config_from_json(std::string_view text,
                                 const EstimatorConfig& base = {},
                                 bool degrees = false);

// Reads a JSON file (IoError if unreadable) and overlays it onto the
// defaults.
EstimatorConfig load_config(const std::filesystem::path& path,
                            bool degrees = false);

}  // namespace ccmhe

#endif  // CCMHE_CONFIG_H_
