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
#ifndef CCMHE_KINEMATICS_H_
#define CCMHE_KINEMATICS_H_

#include <Eigen/Core>

#include "ccmhe/types.h"

// Closed-form geometry of a single inextensible constant-curvature section.
//
// The section has arc length `length` and is described by its bend angle
// theta and the angle phi of the bending plane, measured from the base x-axis.
// Bending at phi = 0 moves the tip towards -x. An IMU rigidly attached to the
// tip reports a roll/pitch pair (gamma, beta) with
//
//   gamma = asin(-cos(phi) sin(theta))
//   beta  = atan2(sin(phi) sin(theta), cos(theta))
//
// The atan2 form equals atan(sin(phi) tan(theta)) for theta in (-pi/2, pi/2)
// and extends continuously past theta = pi/2, so states outside the workspace
// still produce a well-defined reading.
namespace ccmhe::kinematics {

// Below this bend angle the arc formulas switch to their series expansions.
inline constexpr double kSingularityThreshold = 1e-6;

// Central-difference step used by position_jacobian.
inline constexpr double kJacobianStep = 1e-6;

// Tip position p = s/theta * [cos(phi)(cos(theta)-1), sin(phi)(cos(theta)-1),
// sin(theta)]. Throws InvalidArgument on non-finite input or length <= 0.
Eigen::Vector3d forward_position(const ShapeParams& shape, double length);

// Tip orientation relative to the base: rotation by theta about the in-plane
// axis (sin(phi), -cos(phi), 0).
Rotation3 rotation_from_shape(const ShapeParams& shape);

// Roll/pitch reading of a tip-mounted IMU.
Measurement measurement_map(const ShapeParams& shape);

// Inverse of measurement_map. Accepts gamma in [-pi/2, pi/2] and beta in
// [-pi, pi]; returns theta in [0, pi] (in [0, pi/2] whenever |beta| <= pi/2)
// and phi in (-pi, pi]. At the straight configuration phi is unobservable and
// 0 is returned.
ShapeParams invert_measurement(const Measurement& z);

// d(forward_position)/d(theta, phi), by central differences away from the
// straight configuration and by the series limit near it.
Eigen::Matrix<double, 3, 2> position_jacobian(const ShapeParams& shape,
                                              double length);

// d(measurement_map)/d(theta, phi) by central differences. Rows are
// (gamma, beta).
Eigen::Matrix2d measurement_jacobian(const ShapeParams& shape);

// Z-Y-X composition Rz(alpha) * Ry(beta) * Rx(gamma).
Rotation3 rpy_rotation(double gamma, double beta, double alpha);

// Tip state consistent with the shape: position from forward_position.
RobotState state_from_shape(const ShapeParams& shape, double length);

}  // namespace ccmhe::kinematics

#endif  // CCMHE_KINEMATICS_H_
