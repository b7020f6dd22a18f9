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
#include "ccmhe/motion.h"

#include <algorithm>
#include <cmath>

#include "ccmhe/errors.h"
#include "ccmhe/kinematics.h"

namespace ccmhe {

SampleTime::SampleTime(double seconds) : seconds_(seconds) {
  if (!(seconds > 0.0) || !std::isfinite(seconds)) {
    throw InvalidArgument("sample time must be positive and finite");
  }
}

namespace motion {

Vector5d state_derivative(const RobotState& x, const VelocityInput& u,
                          double length) {
  const Eigen::Vector2d rates(u.theta_dot, u.phi_dot);
  Vector5d xdot;
  xdot.head<3>() = kinematics::position_jacobian(x.shape, length) * rates;
  xdot.tail<2>() = rates;
  return xdot;
}

RobotState step(const RobotState& x, const VelocityInput& u, SampleTime dt,
                double length) {
  return RobotState::from_vector(x.to_vector() +
                                 dt.seconds() * state_derivative(x, u, length));
}

Matrix5d step_jacobian(const RobotState& x, const VelocityInput& u,
                       SampleTime dt, double length) {
  const Vector5d base = x.to_vector();
  const double h = kTransitionJacobianStep;
  Matrix5d jac;
  for (int i = 0; i < kStateDim; ++i) {
    Vector5d plus = base, minus = base;
    plus(i) += h;
    minus(i) -= h;
    jac.col(i) = (step(RobotState::from_vector(plus), u, dt, length).to_vector() -
                  step(RobotState::from_vector(minus), u, dt, length).to_vector()) /
                 (2.0 * h);
  }
  return jac;
}

std::vector<VelocityInput> reconstruct_inputs(
    std::span<const Measurement> measurements, SampleTime dt) {
  if (measurements.size() < 2) {
    throw InvalidArgument("reconstruct_inputs: need at least two measurements");
  }
  std::vector<VelocityInput> inputs;
  inputs.reserve(measurements.size() - 1);
  ShapeParams prev = kinematics::invert_measurement(measurements[0]);
  for (std::size_t k = 1; k < measurements.size(); ++k) {
    const ShapeParams next = kinematics::invert_measurement(measurements[k]);
    inputs.push_back({(next.theta - prev.theta) / dt.seconds(),
                      wrap_angle(next.phi - prev.phi) / dt.seconds()});
    prev = next;
  }
  return inputs;
}

std::vector<Measurement> moving_average(
    std::span<const Measurement> measurements, std::size_t window) {
  if (window == 0) {
    throw InvalidArgument("moving_average: window must be at least 1");
  }
  std::vector<Measurement> out(measurements.size());
  double sum_gamma = 0.0, sum_beta = 0.0;
  for (std::size_t k = 0; k < measurements.size(); ++k) {
    sum_gamma += measurements[k].gamma;
    sum_beta += measurements[k].beta;
    if (k >= window) {
      sum_gamma -= measurements[k - window].gamma;
      sum_beta -= measurements[k - window].beta;
    }
    const double n = static_cast<double>(std::min(k + 1, window));
    out[k] = window == 1 ? measurements[k]
                         : Measurement{sum_gamma / n, sum_beta / n};
  }
  return out;
}

}  // namespace motion
}  // namespace ccmhe
