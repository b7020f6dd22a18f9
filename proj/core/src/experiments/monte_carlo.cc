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
#include "ccmhe/experiments/monte_carlo.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <span>
#include <thread>

#include "ccmhe/errors.h"
#include "ccmhe/experiments/metrics.h"
#include "ccmhe/experiments/noise.h"
#include "ccmhe/experiments/trajectory.h"

namespace ccmhe::experiments {

std::uint64_t scenario_seed(const EstimatorConfig& config,
                            const ScenarioSpec& spec, std::size_t index) {
  return spec.seed ? *spec.seed : derive_seed(config.seed, index);
}

ScenarioResult run_scenario(const EstimatorConfig& config,
                            const ScenarioSpec& noise, std::uint64_t seed) {
  const Trajectory traj = generate_trajectory(
      config.trajectory, config.trajectory.samples, config.dt, config.length);
  ScenarioResult out;
  out.seed = seed;
  out.times = traj.times;
  out.truth = traj.truth;
  out.measurements =
      add_noise(traj.clean, noise.sigma_beta, noise.sigma_gamma, seed);
  out.mhe = mhe::run_sliding(out.measurements, config.mhe_config());
  out.ekf = ekf::run_filter(out.measurements, config.ekf_config());

  out.eval_begin = out.mhe.first_sample;
  out.eval_end = out.mhe.first_sample + out.mhe.solve_count();
  const std::span<const RobotState> truth(out.truth);
  const std::span<const RobotState> ekf_states(out.ekf.states);
  const auto count = static_cast<std::size_t>(out.eval_end - out.eval_begin);
  out.srmse_mhe = srmse(truth.subspan(out.eval_begin, count), out.mhe.estimates,
                        config.srmse_components);
  out.srmse_ekf = srmse(truth.subspan(out.eval_begin, count),
                        ekf_states.subspan(out.eval_begin, count),
                        config.srmse_components);
  return out;
}

std::vector<MonteCarloRow> run_monte_carlo(const EstimatorConfig& config) {
  config.validate();
  if (config.montecarlo.empty()) {
    throw ValidationError("montecarlo: no scenarios configured");
  }
  const std::size_t n = config.montecarlo.size();
  std::vector<MonteCarloRow> rows(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < n; i = next++) {
      const ScenarioSpec& spec = config.montecarlo[i];
      MonteCarloRow& row = rows[i];
      row.scenario = static_cast<int>(i) + 1;
      row.sigma_beta = spec.sigma_beta;
      row.sigma_gamma = spec.sigma_gamma;
      row.seed = scenario_seed(config, spec, i);
      try {
        const ScenarioResult r = run_scenario(config, spec, row.seed);
        row.srmse_mhe = r.srmse_mhe;
        row.srmse_ekf = r.srmse_ekf;
        row.solve_count = r.mhe.solve_count();
        row.mean_solve_seconds =
            std::accumulate(r.mhe.solve_seconds.begin(),
                            r.mhe.solve_seconds.end(), 0.0) /
            std::max(1, row.solve_count);
        row.ok = true;
      } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
      }
    }
  };
  std::size_t threads = config.threads > 0
                            ? static_cast<std::size_t>(config.threads)
                            : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return rows;
}

}  // namespace ccmhe::experiments
