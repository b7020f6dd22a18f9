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
#include "ccmhe/kinematics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "ccmhe/errors.h"

namespace ccmhe::kinematics {
namespace {

void require_finite(const ShapeParams& shape, const char* where) {
  if (!std::isfinite(shape.theta) || !std::isfinite(shape.phi)) {
    throw InvalidArgument(std::string(where) + ": non-finite shape");
  }
}

void require_length(double length, const char* where) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw InvalidArgument(std::string(where) + ": length must be positive");
  }
}

// (1 - cos t) / t and sin t / t, evaluated without cancellation.
double one_minus_cos_over(double t) {
  const double h = std::sin(0.5 * t);
  return 2.0 * h * h / t;
}

}  // namespace

Eigen::Vector3d forward_position(const ShapeParams& shape, double length) {
  require_finite(shape, "forward_position");
  require_length(length, "forward_position");
  const double t = shape.theta;
  const double c_phi = std::cos(shape.phi);
  const double s_phi = std::sin(shape.phi);
  if (std::abs(t) < kSingularityThreshold) {
    // Second-order series of the arc about theta = 0.
    return length * Eigen::Vector3d(-0.5 * c_phi * t, -0.5 * s_phi * t,
                                    1.0 - t * t / 6.0);
  }
  const double radial = -one_minus_cos_over(t);
  return length *
         Eigen::Vector3d(c_phi * radial, s_phi * radial, std::sin(t) / t);
}

Rotation3 rotation_from_shape(const ShapeParams& shape) {
  require_finite(shape, "rotation_from_shape");
  const double ct = std::cos(shape.theta);
  const double st = std::sin(shape.theta);
  const double cp = std::cos(shape.phi);
  const double sp = std::sin(shape.phi);
  const double v = ct - 1.0;
  Rotation3 r;
  // Middle diagonal entry is sin^2(phi) (cos(theta) - 1) + 1. Writing
  // cos^2(phi) there breaks orthogonality.
  r << cp * cp * v + 1.0, sp * cp * v, -cp * st,
       sp * cp * v, sp * sp * v + 1.0, -sp * st,
       cp * st, sp * st, ct;
  return r;
}

Measurement measurement_map(const ShapeParams& shape) {
  require_finite(shape, "measurement_map");
  const double st = std::sin(shape.theta);
  const double arg = std::clamp(-std::cos(shape.phi) * st, -1.0, 1.0);
  return Measurement{std::asin(arg),
                     std::atan2(std::sin(shape.phi) * st, std::cos(shape.theta))};
}

ShapeParams invert_measurement(const Measurement& z) {
  if (!std::isfinite(z.gamma) || !std::isfinite(z.beta)) {
    throw InvalidArgument("invert_measurement: non-finite measurement");
  }
  constexpr double kSlack = 1e-12;
  if (std::abs(z.gamma) > 0.5 * kPi + kSlack || std::abs(z.beta) > kPi + kSlack) {
    throw InvalidArgument(
        "invert_measurement: gamma must lie in [-pi/2, pi/2] and beta in "
        "[-pi, pi]");
  }
  // a = cos(phi) sin(theta); rho = sqrt(1 - a^2) is the norm of
  // (sin(phi) sin(theta), cos(theta)), whose direction is beta.
  const double a = -std::sin(z.gamma);
  const double rho = std::sqrt(std::max(0.0, 1.0 - a * a));
  const double cos_theta = std::clamp(rho * std::cos(z.beta), -1.0, 1.0);
  const double in_plane = rho * std::sin(z.beta);
  ShapeParams shape;
  shape.theta = std::acos(cos_theta);
  if (std::hypot(in_plane, a) < 1e-15) {
    shape.phi = 0.0;
  } else {
    shape.phi = wrap_angle(std::atan2(in_plane, a));
  }
  return shape;
}

Eigen::Matrix<double, 3, 2> position_jacobian(const ShapeParams& shape,
                                              double length) {
  require_finite(shape, "position_jacobian");
  require_length(length, "position_jacobian");
  Eigen::Matrix<double, 3, 2> jac;
  const double t = shape.theta;
  if (std::abs(t) < kSingularityThreshold) {
    const double cp = std::cos(shape.phi);
    const double sp = std::sin(shape.phi);
    jac.col(0) = length * Eigen::Vector3d(-0.5 * cp, -0.5 * sp, -t / 3.0);
    jac.col(1) = length * Eigen::Vector3d(0.5 * sp * t, -0.5 * cp * t, 0.0);
    return jac;
  }
  const double h = kJacobianStep;
  jac.col(0) = (forward_position({t + h, shape.phi}, length) -
                forward_position({t - h, shape.phi}, length)) /
               (2.0 * h);
  jac.col(1) = (forward_position({t, shape.phi + h}, length) -
                forward_position({t, shape.phi - h}, length)) /
               (2.0 * h);
  return jac;
}

Eigen::Matrix2d measurement_jacobian(const ShapeParams& shape) {
  require_finite(shape, "measurement_jacobian");
  const double h = kJacobianStep;
  auto diff = [](const Measurement& a, const Measurement& b,
                 double step) -> Eigen::Vector2d {
    return Eigen::Vector2d(a.gamma - b.gamma, wrap_angle(a.beta - b.beta)) /
           (2.0 * step);
  };
  Eigen::Matrix2d jac;
  jac.col(0) = diff(measurement_map({shape.theta + h, shape.phi}),
                    measurement_map({shape.theta - h, shape.phi}), h);
  jac.col(1) = diff(measurement_map({shape.theta, shape.phi + h}),
                    measurement_map({shape.theta, shape.phi - h}), h);
  return jac;
}

Rotation3 rpy_rotation(double gamma, double beta, double alpha) {
  const double cg = std::cos(gamma), sg = std::sin(gamma);
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  Rotation3 r;
  r << ca * cb, ca * sb * sg - sa * cg, ca * sb * cg + sa * sg,
       sa * cb, sa * sb * sg + ca * cg, sa * sb * cg - ca * sg,
       -sb, cb * sg, cb * cg;
  return r;
}

RobotState state_from_shape(const ShapeParams& shape, double length) {
  return RobotState{forward_position(shape, length), shape};
}

}  // namespace ccmhe::kinematics
