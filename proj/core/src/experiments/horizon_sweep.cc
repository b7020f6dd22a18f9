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
#include "ccmhe/experiments/horizon_sweep.h"

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>
#include <span>

#include "ccmhe/errors.h"
#include "ccmhe/experiments/metrics.h"
#include "ccmhe/experiments/monte_carlo.h"
#include "ccmhe/experiments/noise.h"
#include "ccmhe/experiments/trajectory.h"
#include "ccmhe/mhe.h"

namespace ccmhe::experiments {

std::vector<HorizonRow> run_horizon_sweep(const EstimatorConfig& config) {
  config.validate();
  const std::vector<int>& horizons = config.sweep_horizons;
  if (horizons.empty()) throw ValidationError("horizon sweep: empty horizon list");
  const int m = config.trajectory.samples;
  for (int n : horizons) {
    if (n >= m) {
      throw ValidationError("horizon sweep: horizon " + std::to_string(n) +
                            " is not below the sample count " +
                            std::to_string(m));
    }
  }
  const int max_n = *std::max_element(horizons.begin(), horizons.end());
  // Every run estimates samples N-1 .. M-2.
  const int eval_begin = max_n - 1;
  const int eval_end = m - 1;

  const Trajectory traj =
      generate_trajectory(config.trajectory, m, config.dt, config.length);
  const std::vector<Measurement> readings =
      add_noise(traj.clean, config.noise.sigma_beta, config.noise.sigma_gamma,
                scenario_seed(config, config.noise, 0));
  const std::span<const RobotState> truth(traj.truth);

  std::vector<HorizonRow> rows;
  for (int n : horizons) {
    HorizonRow row;
    row.horizon = n;
    try {
      const auto start = std::chrono::steady_clock::now();
      const mhe::SlidingResult r = mhe::run_sliding(readings, config.mhe_config(n));
      row.total_seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count();
      row.solve_count = r.solve_count();
      row.mean_solve_seconds =
          std::accumulate(r.solve_seconds.begin(), r.solve_seconds.end(), 0.0) /
          std::max(1, row.solve_count);
      const std::span<const RobotState> est(r.estimates);
      const auto count = static_cast<std::size_t>(eval_end - eval_begin);
      row.srmse = srmse(truth.subspan(eval_begin, count),
                        est.subspan(eval_begin - r.first_sample, count),
                        config.srmse_components);
      row.ok = true;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ccmhe::experiments
