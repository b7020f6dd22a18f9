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
#ifndef CCMHE_EXPERIMENTS_TRAJECTORY_H_
#define CCMHE_EXPERIMENTS_TRAJECTORY_H_

#include <vector>

#include "ccmhe/types.h"

namespace ccmhe::experiments {

// center + amplitude * sin(2 pi t / period + phase), radians.
struct SinusoidProfile {
  double center = 0.0;
  double amplitude = 0.0;
  double period = 20.0;  // seconds
  double phase = 0.0;

  double at(double t) const;
};

enum class TrajectoryMode {
  // Sinusoidal roll/pitch inside gamma in [0, pi/4], beta in [0, pi/2].
  kFeasible,
  // Planar bend in the phi = pi/2 plane whose bend angle ramps linearly and
  // crosses pi/2 at crossing_time.
  kViolating,
};

struct TrajectorySpec {
  TrajectoryMode mode = TrajectoryMode::kFeasible;
  int samples = 200;
  SinusoidProfile gamma{0.40, 0.20, 20.0, 0.0};
  SinusoidProfile beta{0.80, 0.35, 20.0, 0.0};
  double violating_start = 0.3;  // bend angle at t = 0, radians
  double crossing_time = 6.0;    // seconds
};

struct Trajectory {
  std::vector<double> times;
  std::vector<RobotState> truth;
  std::vector<Measurement> clean;
  std::vector<VelocityInput> inputs;  // samples - 1 true shape rates
};

// Samples `spec` at t_k = k dt. Readings are mapped to shapes by inversion,
// positions follow from forward kinematics and the clean readings are the
// IMU map of those shapes. Throws InvalidArgument if a feasible spec leaves
// the feasible roll/pitch ranges or a violating ramp would pass theta = pi.
Trajectory generate_trajectory(const TrajectorySpec& spec, int samples,
                               double dt, double length);

}  // namespace ccmhe::experiments

#endif  // CCMHE_EXPERIMENTS_TRAJECTORY_H_
