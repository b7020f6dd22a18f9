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
#ifndef CCMHE_MOTION_H_
#define CCMHE_MOTION_H_

#include <cstddef>
#include <span>
#include <vector>

#include "ccmhe/types.h"

// Discrete-time kinematic motion model. The shape parameters integrate the
// commanded rates directly; the tip position follows through the position
// Jacobian of the arc:
//
//   d/dt [p; theta; phi] = [J(theta, phi) u; u].
namespace ccmhe::motion {

// Central-difference step for step_jacobian.
inline constexpr double kTransitionJacobianStep = 1e-5;

Vector5d state_derivative(const RobotState& x, const VelocityInput& u,
                          double length);

// Forward Euler: x + dt * state_derivative(x, u). phi is not wrapped.
RobotState step(const RobotState& x, const VelocityInput& u, SampleTime dt,
                double length);

// d(step)/d(x) by central differences.
Matrix5d step_jacobian(const RobotState& x, const VelocityInput& u,
                       SampleTime dt, double length);

// Rates between consecutive readings: both are inverted to (theta, phi) and
// differenced over dt, with the phi difference wrapped into (-pi, pi].
// Returns measurements.size() - 1 inputs. Throws InvalidArgument for fewer
// than two measurements.
std::vector<VelocityInput> reconstruct_inputs(
    std::span<const Measurement> measurements, SampleTime dt);

// Trailing moving average over `window` samples (fewer at the start).
// window == 1 returns the input unchanged; window == 0 is rejected.
std::vector<Measurement> moving_average(
    std::span<const Measurement> measurements, std::size_t window);

}  // namespace ccmhe::motion

#endif  // CCMHE_MOTION_H_
