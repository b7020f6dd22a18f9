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
#ifndef CCMHE_SOLVER_H_
#define CCMHE_SOLVER_H_

#include <functional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

// Box-constrained nonlinear least squares,
//
//   minimize 0.5 * ||r(v)||^2   subject to   lower <= v <= upper,
//
// solved by projected Levenberg-Marquardt. Each outer iteration first tries
// the undamped Gauss-Newton step on the free variables and falls back to the
// damped loop when it does not reduce the cost. Variables sitting on a bound
// with the gradient pushing outward are held fixed for the iteration; trial
// points are projected onto the box.
namespace ccmhe::solver {

struct NlsProblem {
  int num_variables = 0;
  int num_residuals = 0;
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
  // Writes r(v) into `out` (already sized to num_residuals).
  std::function<void(const Eigen::VectorXd& v, Eigen::VectorXd& out)> residual;
  // Optional. Writes dr/dv into `out` (num_residuals x num_variables, zeroed).
  // Central differences are used when empty.
  std::function<void(const Eigen::VectorXd& v, Eigen::MatrixXd& out)> jacobian;
};

struct SolverSettings {
  int max_iterations = 100;
  double grad_tol = 1e-8;  // on the infinity norm of the projected gradient
  double step_tol = 1e-12;
  double damping_init = 1e-3;
  double damping_increase = 10.0;
  double damping_decrease = 10.0;
  double damping_max = 1e16;
};

enum class Termination { kConverged, kMaxIterations, kStepTooSmall };

std::string_view to_string(Termination t);

struct SolveReport {
  Eigen::VectorXd solution;
  double cost = 0.0;  // 0.5 * ||r||^2 at solution
  int iterations = 0;
  Termination termination = Termination::kMaxIterations;
  double wall_time_seconds = 0.0;
  // Cost at the clamped start followed by the cost after every accepted step.
  std::vector<double> accepted_costs;
};

// Throws InvalidArgument for inconsistent dimensions or lower > upper, and
// NumericFailure (carrying the iterate) if the residual is not finite.
SolveReport solve(const NlsProblem& problem, const Eigen::VectorXd& v0,
                  const SolverSettings& settings = {});

// 0.5 * ||r(v)||^2.
double cost(const NlsProblem& problem, const Eigen::VectorXd& v);

Eigen::VectorXd clamp_to_box(const Eigen::VectorXd& v,
                             const Eigen::VectorXd& lower,
                             const Eigen::VectorXd& upper);

Eigen::MatrixXd finite_difference_jacobian(const NlsProblem& problem,
                                           const Eigen::VectorXd& v);

// Throws InvalidArgument if any setting is non-positive.
void validate(const SolverSettings& settings);

}  // namespace ccmhe::solver

#endif  // CCMHE_SOLVER_H_
