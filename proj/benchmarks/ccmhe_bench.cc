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

#include <benchmark/benchmark.h>

#include <vector>

#include "ccmhe/ekf.h"
#include "ccmhe/experiments/noise.h"
#include "ccmhe/experiments/trajectory.h"
#include "ccmhe/kinematics.h"
#include "ccmhe/mhe.h"
#include "ccmhe/motion.h"

namespace {

using namespace ccmhe;

constexpr double kDt = 0.05;
constexpr double kLength = 1.0;

std::vector<ShapeParams> sample_shapes() {
  std::vector<ShapeParams> shapes;
  for (int i = 0; i < 64; ++i) {
    shapes.push_back({0.5 * kPi * (i + 0.5) / 64.0, -kPi + 2.0 * kPi * i / 64.0});
  }
  return shapes;
}

void BM_ForwardPosition(benchmark::State& state) {
  const auto shapes = sample_shapes();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kinematics::forward_position(shapes[i++ % shapes.size()], kLength));
  }
}
BENCHMARK(BM_ForwardPosition);

void BM_MeasurementRoundTrip(benchmark::State& state) {
  const auto shapes = sample_shapes();
  std::size_t i = 0;
  for (auto _ : state) {
    const Measurement z = kinematics::measurement_map(shapes[i++ % shapes.size()]);
    benchmark::DoNotOptimize(kinematics::invert_measurement(z));
  }
}
BENCHMARK(BM_MeasurementRoundTrip);

void BM_MeasurementJacobian(benchmark::State& state) {
  const auto shapes = sample_shapes();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kinematics::measurement_jacobian(shapes[i++ % shapes.size()]));
  }
}
BENCHMARK(BM_MeasurementJacobian);

// One cold-started window solve on noisy data, horizon from the argument.
void BM_MheWindow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const experiments::Trajectory traj =
      experiments::generate_trajectory({}, n + 1, kDt, kLength);
  const auto noisy = experiments::add_noise(traj.clean, 0.02, 0.02, 7);
  mhe::MheProblem p;
  p.config.horizon = n;
  p.measurements.assign(noisy.begin(), noisy.begin() + n);
  p.inputs = motion::reconstruct_inputs(p.measurements, SampleTime(kDt));
  p.initial_guess = mhe::cold_start_guess(p.measurements, p.config);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mhe::estimate_window(p));
  }
}
BENCHMARK(BM_MheWindow)->DenseRange(10, 60, 10)->Unit(benchmark::kMillisecond);

void BM_EkfRun(benchmark::State& state) {
  const experiments::Trajectory traj =
      experiments::generate_trajectory({}, 200, kDt, kLength);
  const auto noisy = experiments::add_noise(traj.clean, 0.02, 0.02, 7);
  const ekf::EkfConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ekf::run_filter(noisy, cfg));
  }
}
BENCHMARK(BM_EkfRun)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
