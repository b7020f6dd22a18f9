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
#ifndef CCMHE_EKF_H_
#define CCMHE_EKF_H_

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "ccmhe/types.h"

// Extended Kalman filter over the same motion and IMU models as the MHE.
// The filter is unconstrained: the mean may leave the workspace box.
namespace ccmhe::ekf {

struct EkfState {
  Vector5d mean = Vector5d::Zero();
  Matrix5d covariance = Matrix5d::Identity();
};

struct EkfNoise {
  Matrix5d process = 1e-4 * Matrix5d::Identity();      // Q
  Eigen::Matrix2d measurement = 1e-3 * Eigen::Matrix2d::Identity();  // R, rad^2
};

struct EkfConfig {
  double length = 1.0;
  double dt = 0.05;
  double initial_covariance = 1e-2;  // P0 = initial_covariance * I
  EkfNoise noise;
  std::size_t input_prefilter_window = 1;

  void validate() const;
};

// Mean through motion::step, covariance F P F^T + Q with F from
// motion::step_jacobian. phi of the mean is wrapped into (-pi, pi].
EkfState predict(const EkfState& state, const VelocityInput& u, SampleTime dt,
                 const Matrix5d& process_noise, double length);

// Kalman correction with H = dh/dx (non-zero only in the theta, phi columns)
// and the Joseph-form covariance update. Throws NumericFailure if the
// innovation covariance cannot be inverted.
EkfState update(const EkfState& state, const Measurement& z,
                const Eigen::Matrix2d& measurement_noise);

// Jacobian of the IMU map with respect to the full state.
Eigen::Matrix<double, 2, 5> measurement_jacobian(const Vector5d& mean);

struct FilterResult {
  std::vector<RobotState> states;         // one per measurement
  std::vector<double> covariance_trace;   // one per measurement
};

// Initializes from the inversion of the first reading, then predicts with the
// reconstructed rates and corrects with each following reading.
FilterResult run_filter(std::span<const Measurement> measurements,
                        const EkfConfig& config);

}  // namespace ccmhe::ekf

#endif  // CCMHE_EKF_H_
