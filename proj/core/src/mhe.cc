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
#include "ccmhe/mhe.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "ccmhe/errors.h"
#include "ccmhe/kinematics.h"
#include "ccmhe/motion.h"

namespace ccmhe::mhe {
namespace {

struct WindowData {
  std::vector<Measurement> measurements;
  std::vector<VelocityInput> inputs;
  MheConfig config;
  StateBounds bounds;
  Eigen::Vector2d sqrt_measurement;
  Vector5d sqrt_process;
  double sqrt_kinematic = 0.0;
  ResidualLayout layout;
};

RobotState stage(const Eigen::VectorXd& v, int k) {
  return RobotState::from_vector(v.segment<kStateDim>(kStateDim * k));
}

void fill_residual(const WindowData& w, const Eigen::VectorXd& v,
                   Eigen::VectorXd& out) {
  const int n = w.config.horizon;
  const double len = w.config.length;
  const SampleTime dt(w.config.dt);
  for (int k = 0; k < n; ++k) {
    const RobotState x = stage(v, k);
    const Measurement h = kinematics::measurement_map(x.shape);
    const Measurement& z = w.measurements[k];
    out.segment<2>(w.layout.measurement_offset + 2 * k) =
        w.sqrt_measurement.cwiseProduct(
            Eigen::Vector2d(z.gamma - h.gamma, wrap_angle(z.beta - h.beta)));
    if (k + 1 < n) {
      Vector5d d = stage(v, k + 1).to_vector() -
                   motion::step(x, w.inputs[k], dt, len).to_vector();
      d(kPhi) = wrap_angle(d(kPhi));
      out.segment<kStateDim>(w.layout.process_offset + kStateDim * k) =
          w.sqrt_process.cwiseProduct(d);
    }
    if (w.sqrt_kinematic > 0.0) {
      out.segment<3>(w.layout.kinematic_offset + 3 * k) =
          w.sqrt_kinematic *
          (x.position - kinematics::forward_position(x.shape, len));
    }
  }
}

void fill_jacobian(const WindowData& w, const Eigen::VectorXd& v,
                   Eigen::MatrixXd& jac) {
  const int n = w.config.horizon;
  const double len = w.config.length;
  const SampleTime dt(w.config.dt);
  for (int k = 0; k < n; ++k) {
    const RobotState x = stage(v, k);
    const int col = kStateDim * k;
    jac.block<2, 2>(w.layout.measurement_offset + 2 * k, col + kTheta) =
        -(w.sqrt_measurement.asDiagonal() *
          kinematics::measurement_jacobian(x.shape));
    if (k + 1 < n) {
      const int row = w.layout.process_offset + kStateDim * k;
      jac.block<kStateDim, kStateDim>(row, col) =
          -(w.sqrt_process.asDiagonal() *
            motion::step_jacobian(x, w.inputs[k], dt, len));
      jac.block<kStateDim, kStateDim>(row, col + kStateDim) =
          w.sqrt_process.asDiagonal();
    }
    if (w.sqrt_kinematic > 0.0) {
      const int row = w.layout.kinematic_offset + 3 * k;
      jac.block<3, 3>(row, col).diagonal().setConstant(w.sqrt_kinematic);
      jac.block<3, 2>(row, col + kTheta) =
          -w.sqrt_kinematic * kinematics::position_jacobian(x.shape, len);
    }
  }
}

}  // namespace

StateBounds StateBounds::workspace(double length) {
  StateBounds b;
  b.lower << -length, -length, -length, 0.0, -kPi;
  b.upper << length, length, length, 0.5 * kPi, kPi;
  return b;
}

bool StateBounds::contains(const RobotState& x) const {
  const Vector5d v = x.to_vector();
  return (v.array() >= lower.array()).all() && (v.array() <= upper.array()).all();
}

RobotState StateBounds::clamp(const RobotState& x) const {
  return RobotState::from_vector(x.to_vector().cwiseMax(lower).cwiseMin(upper));
}

StateBounds MheConfig::resolved_bounds() const {
  return bounds ? *bounds : StateBounds::workspace(length);
}

void MheConfig::validate() const {
  if (!(length > 0.0)) throw InvalidArgument("mhe: length must be positive");
  if (!(dt > 0.0)) throw InvalidArgument("mhe: dt must be positive");
  if (horizon < 1) throw InvalidArgument("mhe: horizon must be at least 1");
  if ((weights.measurement.array() <= 0.0).any() ||
      (weights.process.array() <= 0.0).any()) {
    throw InvalidArgument("mhe: V and W diagonals must be positive");
  }
  if (!(weights.kinematic >= 0.0)) {
    throw InvalidArgument("mhe: kinematic weight must be non-negative");
  }
  if (input_prefilter_window == 0) {
    throw InvalidArgument("mhe: prefilter window must be at least 1");
  }
  const StateBounds b = resolved_bounds();
  if ((b.lower.array() > b.upper.array()).any()) {
    throw InvalidArgument("mhe: lower bound exceeds upper bound");
  }
  solver::validate(solver);
}

ResidualLayout residual_layout(int horizon, bool with_kinematic_term) {
  ResidualLayout layout;
  layout.measurement_offset = 0;
  layout.process_offset = kMeasurementDim * horizon;
  layout.kinematic_offset = layout.process_offset + kStateDim * (horizon - 1);
  layout.size = layout.kinematic_offset + (with_kinematic_term ? 3 * horizon : 0);
  return layout;
}

solver::NlsProblem build_problem(std::span<const Measurement> measurements,
                                 std::span<const VelocityInput> inputs,
                                 const MheConfig& config) {
  config.validate();
  const int n = config.horizon;
  if (static_cast<int>(measurements.size()) != n ||
      static_cast<int>(inputs.size()) != n - 1) {
    throw InvalidArgument("mhe: window needs " + std::to_string(n) +
                          " measurements and " + std::to_string(n - 1) +
                          " inputs");
  }
  auto data = std::make_shared<WindowData>();
  data->measurements.assign(measurements.begin(), measurements.end());
  data->inputs.assign(inputs.begin(), inputs.end());
  data->config = config;
  data->bounds = config.resolved_bounds();
  const double unit =
      config.weights.measurement_weights_in_degrees ? kRadToDeg : 1.0;
  data->sqrt_measurement = unit * config.weights.measurement.cwiseSqrt();
  data->sqrt_process = config.weights.process.cwiseSqrt();
  data->sqrt_kinematic = std::sqrt(config.weights.kinematic);
  data->layout = residual_layout(n, config.weights.kinematic > 0.0);

  solver::NlsProblem problem;
  problem.num_variables = kStateDim * n;
  problem.num_residuals = data->layout.size;
  problem.lower = data->bounds.lower.replicate(n, 1);
  problem.upper = data->bounds.upper.replicate(n, 1);
  problem.residual = [data](const Eigen::VectorXd& v, Eigen::VectorXd& out) {
    fill_residual(*data, v, out);
  };
  problem.jacobian = [data](const Eigen::VectorXd& v, Eigen::MatrixXd& jac) {
    fill_jacobian(*data, v, jac);
  };
  return problem;
}

std::vector<RobotState> cold_start_guess(
    std::span<const Measurement> measurements, const MheConfig& config) {
  const StateBounds bounds = config.resolved_bounds();
  std::vector<RobotState> guess;
  guess.reserve(measurements.size());
  for (const Measurement& z : measurements) {
    ShapeParams shape = kinematics::invert_measurement(z);
    shape.theta = std::clamp(shape.theta, bounds.lower(kTheta), bounds.upper(kTheta));
    shape.phi = std::clamp(shape.phi, bounds.lower(kPhi), bounds.upper(kPhi));
    guess.push_back(
        bounds.clamp(kinematics::state_from_shape(shape, config.length)));
  }
  return guess;
}

MheEstimate estimate_window(const MheProblem& problem) {
  const MheConfig& cfg = problem.config;
  const solver::NlsProblem nls =
      build_problem(problem.measurements, problem.inputs, cfg);
  const int n = cfg.horizon;
  if (static_cast<int>(problem.initial_guess.size()) != n) {
    throw InvalidArgument("mhe: initial guess must have one state per stage");
  }
  Eigen::VectorXd v0(kStateDim * n);
  for (int k = 0; k < n; ++k) {
    v0.segment<kStateDim>(kStateDim * k) = problem.initial_guess[k].to_vector();
  }

  MheEstimate est;
  est.report = solver::solve(nls, v0, cfg.solver);
  Eigen::VectorXd& v = est.report.solution;

  if (cfg.weights.kinematic == 0.0) {
    const RobotState last = stage(v, n - 1);
    const Eigen::Vector3d shift =
        kinematics::forward_position(last.shape, cfg.length) - last.position;
    const StateBounds bounds = cfg.resolved_bounds();
    for (int k = 0; k < n; ++k) {
      Eigen::Vector3d p = v.segment<3>(kStateDim * k) + shift;
      v.segment<3>(kStateDim * k) =
          p.cwiseMax(bounds.lower.head<3>()).cwiseMin(bounds.upper.head<3>());
    }
    est.report.cost = solver::cost(nls, v);
  }

  est.cost = 2.0 * est.report.cost;
  est.states.reserve(n);
  for (int k = 0; k < n; ++k) est.states.push_back(stage(v, k));
  return est;
}

SlidingResult run_sliding(std::span<const Measurement> measurements,
                          const MheConfig& config) {
  config.validate();
  const int m = static_cast<int>(measurements.size());
  const int n = config.horizon;
  if (m <= n) {
    throw InvalidArgument("mhe: need more measurements (" + std::to_string(m) +
                          ") than the horizon (" + std::to_string(n) + ")");
  }
  const SampleTime dt(config.dt);
  const std::vector<Measurement> filtered =
      motion::moving_average(measurements, config.input_prefilter_window);
  const std::vector<VelocityInput> inputs =
      motion::reconstruct_inputs(filtered, dt);

  SlidingResult result;
  result.first_sample = n - 1;
  const int solves = m - n;
  result.estimates.reserve(solves);
  result.solve_seconds.reserve(solves);
  result.iterations.reserve(solves);
  result.costs.reserve(solves);

  MheProblem problem;
  problem.config = config;
  std::vector<RobotState> previous;
  for (int k = 0; k < solves; ++k) {
    const auto window = measurements.subspan(k, n);
    problem.measurements.assign(window.begin(), window.end());
    problem.inputs.assign(inputs.begin() + k, inputs.begin() + k + n - 1);
    if (config.warm_start && !previous.empty()) {
      problem.initial_guess.assign(previous.begin() + 1, previous.end());
      problem.initial_guess.push_back(previous.back());
    } else {
      problem.initial_guess = cold_start_guess(window, config);
    }
    MheEstimate est = estimate_window(problem);
    result.estimates.push_back(est.states.back());
    result.solve_seconds.push_back(est.report.wall_time_seconds);
    result.iterations.push_back(est.report.iterations);
    result.costs.push_back(est.cost);
    previous = std::move(est.states);
  }
  return result;
}

}  // namespace ccmhe::mhe
