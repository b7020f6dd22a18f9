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
#include "ccmhe/experiments/trajectory.h"

#include <cmath>
#include <string>

#include "ccmhe/errors.h"
#include "ccmhe/kinematics.h"

namespace ccmhe::experiments {
namespace {

void require_within(const SinusoidProfile& p, double lo, double hi,
                    const char* name) {
  const double a = std::abs(p.amplitude);
  if (!(p.period > 0.0) || p.center - a < lo - 1e-12 ||
      p.center + a > hi + 1e-12) {
    throw InvalidArgument(std::string("trajectory: ") + name +
                          " profile leaves its feasible range or has a "
                          "non-positive period");
  }
}

}  // namespace

double SinusoidProfile::at(double t) const {
  return center + amplitude * std::sin(2.0 * kPi * t / period + phase);
}

Trajectory generate_trajectory(const TrajectorySpec& spec, int samples,
                               double dt, double length) {
  if (samples < 1) throw InvalidArgument("trajectory: need at least one sample");
  if (!(dt > 0.0)) throw InvalidArgument("trajectory: dt must be positive");
  if (!(length > 0.0)) throw InvalidArgument("trajectory: length must be positive");

  double ramp_rate = 0.0;
  if (spec.mode == TrajectoryMode::kFeasible) {
    require_within(spec.gamma, 0.0, 0.25 * kPi, "gamma");
    require_within(spec.beta, 0.0, 0.5 * kPi, "beta");
  } else {
    if (!(spec.crossing_time > 0.0) || !(spec.violating_start >= 0.0) ||
        !(spec.violating_start < 0.5 * kPi)) {
      throw InvalidArgument(
          "trajectory: violating ramp needs a start angle in [0, pi/2) and a "
          "positive crossing time");
    }
    ramp_rate = (0.5 * kPi - spec.violating_start) / spec.crossing_time;
    if (spec.violating_start + ramp_rate * (samples - 1) * dt >= kPi) {
      throw InvalidArgument("trajectory: violating ramp would pass theta = pi");
    }
  }

  Trajectory traj;
  traj.times.reserve(samples);
  traj.truth.reserve(samples);
  traj.clean.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    const double t = k * dt;
    const Measurement reading =
        spec.mode == TrajectoryMode::kFeasible
            ? Measurement{spec.gamma.at(t), spec.beta.at(t)}
            : Measurement{0.0, spec.violating_start + ramp_rate * t};
    const ShapeParams shape = kinematics::invert_measurement(reading);
    traj.times.push_back(t);
    traj.truth.push_back(kinematics::state_from_shape(shape, length));
    traj.clean.push_back(kinematics::measurement_map(shape));
  }
  for (int k = 0; k + 1 < samples; ++k) {
    const ShapeParams& a = traj.truth[k].shape;
    const ShapeParams& b = traj.truth[k + 1].shape;
    traj.inputs.push_back(
        {(b.theta - a.theta) / dt, wrap_angle(b.phi - a.phi) / dt});
  }
  return traj;
}

}  // namespace ccmhe::experiments
