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

#include "oracles.h"

#include <cmath>
#include <limits>

namespace ccmhe::oracle {
namespace {

using ld = long double;
constexpr ld kPiL = 3.141592653589793238462643383279502884L;

Eigen::Matrix3d rz(ld a) {
  Eigen::Matrix3d r;
  r << double(std::cos(a)), double(-std::sin(a)), 0,
       double(std::sin(a)), double(std::cos(a)), 0,
       0, 0, 1;
  return r;
}

Eigen::Matrix3d ry(ld a) {
  Eigen::Matrix3d r;
  r << double(std::cos(a)), 0, double(std::sin(a)),
       0, 1, 0,
       double(-std::sin(a)), 0, double(std::cos(a));
  return r;
}

ld wrap(ld a) {
  while (a > kPiL) a -= 2 * kPiL;
  while (a <= -kPiL) a += 2 * kPiL;
  return a;
}

}  // namespace

Eigen::Vector3d position(double theta, double phi, double length) {
  const ld t = theta, p = phi, s = length;
  return Eigen::Vector3d(double(s * std::cos(p) * (std::cos(t) - 1) / t),
                         double(s * std::sin(p) * (std::cos(t) - 1) / t),
                         double(s * std::sin(t) / t));
}

Eigen::Matrix<double, 3, 2> position_jacobian(double theta, double phi,
                                              double length) {
  const ld t = theta, p = phi, s = length;
  const ld c = std::cos(t), sn = std::sin(t);
  // d/dt (cos t - 1)/t = (-t sin t - cos t + 1) / t^2
  const ld dg = (-t * sn - c + 1) / (t * t);
  const ld g = (c - 1) / t;
  const ld dz = (t * c - sn) / (t * t);
  Eigen::Matrix<double, 3, 2> j;
  j << double(s * std::cos(p) * dg), double(-s * std::sin(p) * g),
       double(s * std::sin(p) * dg), double(s * std::cos(p) * g),
       double(s * dz), 0.0;
  return j;
}

Eigen::Matrix3d rotation_by_composition(double theta, double phi) {
  return rz(phi) * ry(-static_cast<ld>(theta)) * rz(-static_cast<ld>(phi));
}

Measurement measurement(double theta, double phi) {
  const ld t = theta, p = phi;
  return {double(std::asin(-std::cos(p) * std::sin(t))),
          double(std::atan(std::sin(p) * std::tan(t)))};
}

ShapeParams invert(const Measurement& z) {
  const ld a = -std::sin(static_cast<ld>(z.gamma));
  const ld b = std::tan(static_cast<ld>(z.beta));
  const ld ct = std::sqrt((1 - a * a) / (1 + b * b));
  return {double(std::acos(ct)), double(std::atan2(b * ct, a))};
}

ShapeParams grid_invert(const Measurement& z, int grid) {
  ShapeParams best{0.0, 0.0};
  ld best_err = std::numeric_limits<ld>::infinity();
  for (int i = 0; i <= grid; ++i) {
    const double t = 0.5 * kPi * i / grid;
    for (int j = 1; j <= grid; ++j) {
      const double p = -kPi + 2.0 * kPi * j / grid;
      const ld dg = std::asin(-std::cos(p) * std::sin(t)) - z.gamma;
      const ld db = std::atan2(std::sin(p) * std::sin(t), std::cos(t)) - z.beta;
      const ld err = dg * dg + db * db;
      if (err < best_err) {
        best_err = err;
        best = {t, p};
      }
    }
  }
  return best;
}

Vector5d euler_step(const Vector5d& x, const VelocityInput& u, double dt,
                    double length) {
  const Eigen::Matrix<double, 3, 2> j =
      position_jacobian(x(kTheta), x(kPhi), length);
  Vector5d out = x;
  out.head<3>() += dt * (j * Eigen::Vector2d(u.theta_dot, u.phi_dot));
  out(kTheta) += dt * u.theta_dot;
  out(kPhi) += dt * u.phi_dot;
  return out;
}

double window_cost(std::span<const RobotState> states,
                   std::span<const Measurement> measurements,
                   std::span<const VelocityInput> inputs, double dt,
                   double length, const CostTerms& terms) {
  const ld deg = 180.0L / kPiL;
  ld total = 0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    const Vector5d x = states[k].to_vector();
    const ld st = std::sin(static_cast<ld>(x(kTheta)));
    const ld hg = std::asin(-std::cos(static_cast<ld>(x(kPhi))) * st);
    const ld hb = std::atan2(std::sin(static_cast<ld>(x(kPhi))) * st,
                             std::cos(static_cast<ld>(x(kTheta))));
    const ld eg = (measurements[k].gamma - hg) * deg;
    const ld eb = wrap(measurements[k].beta - hb) * deg;
    total += terms.measurement_weights(0) * eg * eg +
             terms.measurement_weights(1) * eb * eb;
    if (k + 1 < states.size()) {
      Vector5d d = states[k + 1].to_vector() -
                   euler_step(x, inputs[k], dt, length);
      d(kPhi) = double(wrap(d(kPhi)));
      for (int i = 0; i < kStateDim; ++i) {
        total += terms.process_weights(i) * static_cast<ld>(d(i)) * d(i);
      }
    }
    if (terms.kinematic_weight > 0.0) {
      const Eigen::Vector3d e =
          x.head<3>() - (std::abs(x(kTheta)) < 1e-9
                             ? Eigen::Vector3d(0, 0, length)
                             : position(x(kTheta), x(kPhi), length));
      total += terms.kinematic_weight * static_cast<ld>(e.squaredNorm());
    }
  }
  return double(total);
}

double srmse(std::span<const RobotState> truth,
             std::span<const RobotState> estimates) {
  double total = 0.0;
  for (int i = 0; i < kStateDim; ++i) {
    double sq = 0.0;
    for (std::size_t k = 0; k < truth.size(); ++k) {
      double e = estimates[k].to_vector()(i) - truth[k].to_vector()(i);
      if (i == kPhi) e = double(wrap(e));
      sq += e * e;
    }
    total += std::sqrt(sq / double(truth.size()));
  }
  return total;
}

}  // namespace ccmhe::oracle
