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
#ifndef CCMHE_MHE_H_
#define CCMHE_MHE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "ccmhe/solver.h"
#include "ccmhe/types.h"

// Moving horizon estimation over a fixed window of N IMU readings.
//
// The decision vector stacks the N window states [x, y, z, theta, phi]. The
// window cost is
//
//   sum_k  ||z_k - h(x_k)||^2_V                         (k = 0..N-1)
// + sum_k  ||x_{k+1} - step(x_k, u_k)||^2_W             (k = 0..N-2)
// + sum_k  w_kin ||p_k - m(theta_k, phi_k)||^2          (k = 0..N-1)
//
// where h is the IMU map, step the Euler motion model and m the arc forward
// kinematics. Measurement residuals enter in degrees when
// `measurement_weights_in_degrees` is set. The workspace box is enforced
// exactly by the solver.
//
// Without the kinematic term (w_kin = 0) the cost is invariant to a common
// translation of all window positions; in that case the translation is fixed
// after the solve by placing the final stage on its forward kinematics.
namespace ccmhe::mhe {

struct Weights {
  Eigen::Vector2d measurement = Eigen::Vector2d::Constant(2.0);
  Vector5d process = Vector5d::Constant(10.0);
  double kinematic = 1e3;
  bool measurement_weights_in_degrees = true;
};

struct StateBounds {
  Vector5d lower;
  Vector5d upper;

  // |x|, |y|, |z| <= length, 0 <= theta <= pi/2, -pi <= phi <= pi.
  static StateBounds workspace(double length);
  bool contains(const RobotState& x) const;
  RobotState clamp(const RobotState& x) const;
};

struct MheConfig {
  double length = 1.0;
  double dt = 0.05;
  int horizon = 30;
  Weights weights;
  // Uses StateBounds::workspace(length) when unset.
  std::optional<StateBounds> bounds;
  solver::SolverSettings solver;
  // Trailing moving-average length applied before input reconstruction;
  // 1 disables it.
  std::size_t input_prefilter_window = 1;
  // Initialize each window from the shifted previous solution. When false
  // every window starts from measurement inversion.
  bool warm_start = true;

  StateBounds resolved_bounds() const;
  // Throws InvalidArgument on non-positive length, dt, horizon or weights.
  void validate() const;
};

struct ResidualLayout {
  int measurement_offset = 0;
  int process_offset = 0;
  int kinematic_offset = 0;
  int size = 0;
};

ResidualLayout residual_layout(int horizon, bool with_kinematic_term);

struct MheProblem {
  std::vector<Measurement> measurements;  // N
  std::vector<VelocityInput> inputs;      // N - 1
  std::vector<RobotState> initial_guess;  // N
  MheConfig config;
};

struct MheEstimate {
  std::vector<RobotState> states;
  double cost = 0.0;  // sum of squared weighted residuals
  solver::SolveReport report;
};

// Least-squares problem for one window. Throws InvalidArgument unless
// measurements has config.horizon entries and inputs one fewer.
solver::NlsProblem build_problem(std::span<const Measurement> measurements,
                                 std::span<const VelocityInput> inputs,
                                 const MheConfig& config);

// Stage-wise inversion of the readings, placed on forward kinematics and
// clamped into the box.
std::vector<RobotState> cold_start_guess(
    std::span<const Measurement> measurements, const MheConfig& config);

MheEstimate estimate_window(const MheProblem& problem);

struct SlidingResult {
  // estimates[i] belongs to sample first_sample + i.
  int first_sample = 0;
  std::vector<RobotState> estimates;
  std::vector<double> solve_seconds;
  std::vector<int> iterations;
  std::vector<double> costs;

  int solve_count() const { return static_cast<int>(estimates.size()); }
};

// Slides the window over z_k..z_{k+N-1} for k = 0..M-N-1 and keeps the final
// stage of each solution, so samples 0..N-2 and the last sample get no
// estimate. Throws InvalidArgument when M <= N.
SlidingResult run_sliding(std::span<const Measurement> measurements,
                          const MheConfig& config);

}  // namespace ccmhe::mhe

#endif  // CCMHE_MHE_H_
