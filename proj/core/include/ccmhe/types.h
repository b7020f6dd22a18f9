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

#ifndef CCMHE_TYPES_H_
#define CCMHE_TYPES_H_

#include <cmath>
#include <numbers>

#include <Eigen/Core>

namespace ccmhe {

using Vector5d = Eigen::Matrix<double, 5, 1>;
using Matrix5d = Eigen::Matrix<double, 5, 5>;
using Rotation3 = Eigen::Matrix3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kRadToDeg = 180.0 / std::numbers::pi;
inline constexpr double kDegToRad = std::numbers::pi / 180.0;

// Layout of the stacked state vector [x, y, z, theta, phi].
enum StateIndex : int { kX = 0, kY = 1, kZ = 2, kTheta = 3, kPhi = 4 };
inline constexpr int kStateDim = 5;
inline constexpr int kMeasurementDim = 2;

// Bend angle theta and bend-plane angle phi of a constant-curvature arc, in
// radians. Any finite values are representable; the workspace box is applied
// by the estimators, not here.
struct ShapeParams {
  double theta = 0.0;
  double phi = 0.0;
};

// Tip position (meters) together with the shape that produced it.
struct RobotState {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  ShapeParams shape;

  Vector5d to_vector() const {
    Vector5d v;
    v << position, shape.theta, shape.phi;
    return v;
  }
  static RobotState from_vector(const Vector5d& v) {
    return RobotState{v.head<3>(), ShapeParams{v(kTheta), v(kPhi)}};
  }
};

// IMU roll (gamma) and pitch (beta), radians.
struct Measurement {
  double gamma = 0.0;
  double beta = 0.0;
};

// Rates of the shape parameters, rad/s.
struct VelocityInput {
  double theta_dot = 0.0;
  double phi_dot = 0.0;
};

// Sampling period in seconds; always positive.
class SampleTime {
 public:
  explicit SampleTime(double seconds);
  double seconds() const { return seconds_; }

 private:
  double seconds_;
};

// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

}  // namespace ccmhe

#endif  // CCMHE_TYPES_H_
