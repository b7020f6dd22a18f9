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
#include "ccmhe/ekf.h"

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include "ccmhe/errors.h"
#include "ccmhe/kinematics.h"
#include "ccmhe/motion.h"

namespace ccmhe::ekf {
namespace {

bool is_spd(const Eigen::MatrixXd& m) {
  if (!m.allFinite() || !m.isApprox(m.transpose(), 1e-9)) return false;
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  return llt.info() == Eigen::Success;
}

}  // namespace

void EkfConfig::validate() const {
  if (!(length > 0.0)) throw InvalidArgument("ekf: length must be positive");
  if (!(dt > 0.0)) throw InvalidArgument("ekf: dt must be positive");
  if (!(initial_covariance > 0.0)) {
    throw InvalidArgument("ekf: initial covariance must be positive");
  }
  if (!is_spd(noise.process) || !is_spd(noise.measurement)) {
    throw InvalidArgument("ekf: Q and R must be symmetric positive definite");
  }
  if (input_prefilter_window == 0) {
    throw InvalidArgument("ekf: prefilter window must be at least 1");
  }
}

EkfState predict(const EkfState& state, const VelocityInput& u, SampleTime dt,
                 const Matrix5d& process_noise, double length) {
  const RobotState x = RobotState::from_vector(state.mean);
  const Matrix5d f = motion::step_jacobian(x, u, dt, length);
  EkfState out;
  out.mean = motion::step(x, u, dt, length).to_vector();
  out.mean(kPhi) = wrap_angle(out.mean(kPhi));
  out.covariance = f * state.covariance * f.transpose() + process_noise;
  out.covariance = 0.5 * (out.covariance + out.covariance.transpose()).eval();
  return out;
}

Eigen::Matrix<double, 2, 5> measurement_jacobian(const Vector5d& mean) {
  Eigen::Matrix<double, 2, 5> h = Eigen::Matrix<double, 2, 5>::Zero();
  h.rightCols<2>() =
      kinematics::measurement_jacobian(ShapeParams{mean(kTheta), mean(kPhi)});
  return h;
}

EkfState update(const EkfState& state, const Measurement& z,
                const Eigen::Matrix2d& measurement_noise) {
  const ShapeParams shape{state.mean(kTheta), state.mean(kPhi)};
  const Measurement predicted = kinematics::measurement_map(shape);
  const Eigen::Vector2d innovation(z.gamma - predicted.gamma,
                                   wrap_angle(z.beta - predicted.beta));
  if (!innovation.allFinite()) {
    throw NumericFailure("ekf: innovation is not finite");
  }
  const Eigen::Matrix<double, 2, 5> h = measurement_jacobian(state.mean);
  const Matrix5d& p = state.covariance;
  const Eigen::Matrix2d s = h * p * h.transpose() + measurement_noise;
  Eigen::FullPivLU<Eigen::Matrix2d> lu(s);
  if (!s.allFinite() || !lu.isInvertible() || lu.rcond() < 1e-14) {
    throw NumericFailure("ekf: innovation covariance is singular");
  }
  const Eigen::Matrix<double, 5, 2> gain = p * h.transpose() * lu.inverse();
  const Matrix5d i_kh = Matrix5d::Identity() - gain * h;

  EkfState out;
  out.mean = state.mean + gain * innovation;
  out.mean(kPhi) = wrap_angle(out.mean(kPhi));
  out.covariance = i_kh * p * i_kh.transpose() +
                   gain * measurement_noise * gain.transpose();
  out.covariance = 0.5 * (out.covariance + out.covariance.transpose()).eval();
  return out;
}

FilterResult run_filter(std::span<const Measurement> measurements,
                        const EkfConfig& config) {
  config.validate();
  if (measurements.empty()) {
    throw InvalidArgument("ekf: need at least one measurement");
  }
  const SampleTime dt(config.dt);
  FilterResult result;
  result.states.reserve(measurements.size());
  result.covariance_trace.reserve(measurements.size());

  EkfState state;
  state.mean = kinematics::state_from_shape(
                   kinematics::invert_measurement(measurements[0]),
                   config.length)
                   .to_vector();
  state.covariance = config.initial_covariance * Matrix5d::Identity();
  result.states.push_back(RobotState::from_vector(state.mean));
  result.covariance_trace.push_back(state.covariance.trace());
  if (measurements.size() == 1) return result;

  const std::vector<Measurement> filtered =
      motion::moving_average(measurements, config.input_prefilter_window);
  const std::vector<VelocityInput> inputs =
      motion::reconstruct_inputs(filtered, dt);
  for (std::size_t k = 1; k < measurements.size(); ++k) {
    state = predict(state, inputs[k - 1], dt, config.noise.process,
                    config.length);
    state = update(state, measurements[k], config.noise.measurement);
    result.states.push_back(RobotState::from_vector(state.mean));
    result.covariance_trace.push_back(state.covariance.trace());
  }
  return result;
}

}  // namespace ccmhe::ekf
