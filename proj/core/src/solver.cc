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
#include "ccmhe/solver.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include <Eigen/Cholesky>

#include "ccmhe/errors.h"

namespace ccmhe::solver {
namespace {

void validate_problem(const NlsProblem& p) {
  if (p.num_variables <= 0 || p.num_residuals <= 0) {
    throw InvalidArgument("solver: problem dimensions must be positive");
  }
  if (p.lower.size() != p.num_variables || p.upper.size() != p.num_variables) {
    throw InvalidArgument("solver: bounds do not match the variable count");
  }
  if ((p.lower.array() > p.upper.array()).any()) {
    throw InvalidArgument("solver: lower bound exceeds upper bound");
  }
  if (!p.residual) {
    throw InvalidArgument("solver: residual function is required");
  }
}

Eigen::VectorXd evaluate(const NlsProblem& p, const Eigen::VectorXd& v) {
  Eigen::VectorXd r(p.num_residuals);
  p.residual(v, r);
  if (!r.allFinite()) {
    throw NumericFailure("solver: residual is not finite", v);
  }
  return r;
}

Eigen::MatrixXd evaluate_jacobian(const NlsProblem& p,
                                  const Eigen::VectorXd& v) {
  if (!p.jacobian) return finite_difference_jacobian(p, v);
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(p.num_residuals, p.num_variables);
  p.jacobian(v, jac);
  if (!jac.allFinite()) {
    throw NumericFailure("solver: jacobian is not finite", v);
  }
  return jac;
}

// Solves (A_ff + damping * D_ff) d_f = -g_f on the free set, with d = 0 on
// the fixed set. Returns false if the reduced system is not positive definite
// or too badly conditioned to trust.
bool reduced_step(const Eigen::MatrixXd& normal, const Eigen::VectorXd& grad,
                  const std::vector<int>& free, double damping,
                  Eigen::VectorXd& step) {
  const int nf = static_cast<int>(free.size());
  step.setZero(normal.rows());
  if (nf == 0) return true;
  const double max_diag = std::max(1.0, normal.diagonal().maxCoeff());
  const double floor = 1e-12 * max_diag;
  Eigen::MatrixXd a(nf, nf);
  Eigen::VectorXd b(nf);
  for (int i = 0; i < nf; ++i) {
    for (int j = 0; j < nf; ++j) a(i, j) = normal(free[i], free[j]);
    b(i) = -grad(free[i]);
    if (damping > 0.0) a(i, i) += damping * std::max(a(i, i), floor);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) return false;
  if (damping == 0.0 && llt.rcond() < 1e-12) return false;
  const Eigen::VectorXd d = llt.solve(b);
  if (!d.allFinite()) return false;
  for (int i = 0; i < nf; ++i) step(free[i]) = d(i);
  return true;
}

}  // namespace

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::kConverged:
      return "converged";
    case Termination::kMaxIterations:
      return "max-iter";
    case Termination::kStepTooSmall:
      return "step-too-small";
  }
  return "unknown";
}

void validate(const SolverSettings& s) {
  if (s.max_iterations <= 0 || !(s.grad_tol > 0.0) || !(s.step_tol > 0.0) ||
      !(s.damping_init > 0.0) || !(s.damping_increase > 1.0) ||
      !(s.damping_decrease > 1.0) || !(s.damping_max > s.damping_init)) {
    throw InvalidArgument(
        "solver settings: iterations, tolerances and damping must be positive "
        "and damping factors greater than one");
  }
}

Eigen::VectorXd clamp_to_box(const Eigen::VectorXd& v,
                             const Eigen::VectorXd& lower,
                             const Eigen::VectorXd& upper) {
  return v.cwiseMax(lower).cwiseMin(upper);
}

double cost(const NlsProblem& problem, const Eigen::VectorXd& v) {
  validate_problem(problem);
  return 0.5 * evaluate(problem, v).squaredNorm();
}

Eigen::MatrixXd finite_difference_jacobian(const NlsProblem& problem,
                                           const Eigen::VectorXd& v) {
  Eigen::MatrixXd jac(problem.num_residuals, problem.num_variables);
  Eigen::VectorXd plus = v, minus = v;
  for (int j = 0; j < problem.num_variables; ++j) {
    const double h = 6e-6 * std::max(1.0, std::abs(v(j)));
    plus(j) = v(j) + h;
    minus(j) = v(j) - h;
    jac.col(j) = (evaluate(problem, plus) - evaluate(problem, minus)) / (2.0 * h);
    plus(j) = minus(j) = v(j);
  }
  return jac;
}

SolveReport solve(const NlsProblem& problem, const Eigen::VectorXd& v0,
                  const SolverSettings& settings) {
  const auto start = std::chrono::steady_clock::now();
  validate_problem(problem);
  validate(settings);
  if (v0.size() != problem.num_variables) {
    throw InvalidArgument("solver: initial point has the wrong dimension");
  }

  const Eigen::VectorXd& lo = problem.lower;
  const Eigen::VectorXd& hi = problem.upper;
  SolveReport report;
  Eigen::VectorXd v = clamp_to_box(v0, lo, hi);
  Eigen::VectorXd r = evaluate(problem, v);
  double c = 0.5 * r.squaredNorm();
  double damping = settings.damping_init;
  report.accepted_costs.push_back(c);
  report.termination = Termination::kMaxIterations;

  const int n = problem.num_variables;
  Eigen::MatrixXd normal(n, n);
  Eigen::VectorXd step(n);
  std::vector<int> free;
  free.reserve(n);

  auto step_is_tiny = [&](const Eigen::VectorXd& trial) {
    return (trial - v).norm() < settings.step_tol * (1.0 + v.norm());
  };

  int iter = 0;
  for (; iter < settings.max_iterations; ++iter) {
    const Eigen::MatrixXd jac = evaluate_jacobian(problem, v);
    const Eigen::VectorXd grad = jac.transpose() * r;
    const Eigen::VectorXd projected = v - clamp_to_box(v - grad, lo, hi);
    if (projected.lpNorm<Eigen::Infinity>() < settings.grad_tol) {
      report.termination = Termination::kConverged;
      break;
    }

    normal.setZero();
    normal.selfadjointView<Eigen::Lower>().rankUpdate(jac.transpose());
    normal.triangularView<Eigen::StrictlyUpper>() = normal.transpose();

    free.clear();
    for (int i = 0; i < n; ++i) {
      const bool pinned_low = v(i) <= lo(i) && grad(i) > 0.0;
      const bool pinned_high = v(i) >= hi(i) && grad(i) < 0.0;
      if (!pinned_low && !pinned_high) free.push_back(i);
    }

    bool accepted = false;
    bool stalled = false;
    // Undamped Gauss-Newton trial first, then the damped loop.
    for (double mu = 0.0;; mu = damping) {
      if (!reduced_step(normal, grad, free, mu, step)) {
        if (mu == 0.0) continue;
        damping *= settings.damping_increase;
        if (damping > settings.damping_max) {
          stalled = true;
          break;
        }
        continue;
      }
      const Eigen::VectorXd trial = clamp_to_box(v + step, lo, hi);
      if (step_is_tiny(trial)) {
        stalled = true;
        break;
      }
      Eigen::VectorXd r_trial = evaluate(problem, trial);
      const double c_trial = 0.5 * r_trial.squaredNorm();
      if (c_trial < c) {
        v = trial;
        r = std::move(r_trial);
        c = c_trial;
        damping = std::max(damping / settings.damping_decrease, 1e-15);
        report.accepted_costs.push_back(c);
        accepted = true;
        break;
      }
      if (mu == 0.0) continue;
      damping *= settings.damping_increase;
      if (damping > settings.damping_max) {
        stalled = true;
        break;
      }
    }
    if (stalled && !accepted) {
      report.termination = Termination::kStepTooSmall;
      ++iter;
      break;
    }
  }

  report.solution = std::move(v);
  report.cost = c;
  report.iterations = iter;
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace ccmhe::solver
