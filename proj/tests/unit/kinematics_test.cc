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

#include <cmath>
#include <random>

#include <Eigen/LU>
#include <gtest/gtest.h>

#include "ccmhe/errors.h"
#include "ccmhe/kinematics.h"
#include "oracles.h"

namespace ccmhe {
namespace {

using kinematics::forward_position;
using kinematics::invert_measurement;
using kinematics::measurement_map;
using kinematics::position_jacobian;
using kinematics::rotation_from_shape;

TEST(ForwardPosition, StraightLimit) {
  const Eigen::Vector3d p = forward_position({0.0, 0.7}, 1.0);
  EXPECT_NEAR(p.x(), 0.0, 1e-15);
  EXPECT_NEAR(p.y(), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(p.z(), 1.0);
}

TEST(ForwardPosition, QuarterBend) {
  const Eigen::Vector3d p = forward_position({kPi / 2, 0.0}, 1.0);
  EXPECT_NEAR(p.x(), -2.0 / kPi, 1e-15);
  EXPECT_NEAR(p.y(), 0.0, 1e-15);
  EXPECT_NEAR(p.z(), 2.0 / kPi, 1e-15);
}

TEST(ForwardPosition, HighPrecisionReference) {
  // 40-digit evaluation at theta = pi/3, phi = pi/4, s = 0.2.
  const Eigen::Vector3d p = forward_position({kPi / 3, kPi / 4}, 0.2);
  EXPECT_NEAR(p.x(), -0.067523723711782955217, 1e-15);
  EXPECT_NEAR(p.y(), -0.067523723711782955217, 1e-15);
  EXPECT_NEAR(p.z(), 0.16539866862653761485, 1e-15);
}

TEST(ForwardPosition, ContinuousAcrossSeriesBranch) {
  const double eps = kinematics::kSingularityThreshold;
  for (double phi : {0.0, 0.9, -2.4}) {
    const Eigen::Vector3d a = forward_position({eps, phi}, 0.7);
    const Eigen::Vector3d b = forward_position({0.999 * eps, phi}, 0.7);
    EXPECT_LT((a - b).norm(), 1e-8 * 0.7);
  }
}

TEST(ForwardPosition, RejectsBadInput) {
  EXPECT_THROW(forward_position({NAN, 0.0}, 1.0), InvalidArgument);
  EXPECT_THROW(forward_position({0.1, INFINITY}, 1.0), InvalidArgument);
  EXPECT_THROW(forward_position({0.1, 0.0}, 0.0), InvalidArgument);
  EXPECT_THROW(forward_position({0.1, 0.0}, -1.0), InvalidArgument);
}

TEST(Rotation, StraightIsIdentity) {
  for (double phi : {0.0, 1.3, -3.0}) {
    EXPECT_TRUE(rotation_from_shape({0.0, phi}).isApprox(
        Eigen::Matrix3d::Identity(), 1e-15));
  }
}

TEST(Rotation, QuarterBendInYPlane) {
  Eigen::Matrix3d expected;
  expected << 1, 0, 0, 0, 0, -1, 0, 1, 0;
  EXPECT_LT((rotation_from_shape({kPi / 2, kPi / 2}) - expected)
                .cwiseAbs()
                .maxCoeff(),
            1e-15);
}

TEST(Rotation, MatchesCompositionReference) {
  Eigen::Matrix3d frozen;
  frozen << 0.92677669529663688, -0.12682648404432206, -0.35355339059327376,
      -0.12682648404432206, 0.78033008588991064, -0.61237243569579452,
      0.35355339059327376, 0.61237243569579452, 0.70710678118654752;
  const Eigen::Matrix3d r = rotation_from_shape({kPi / 4, kPi / 3});
  EXPECT_LT((r - frozen).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((r - oracle::rotation_by_composition(kPi / 4, kPi / 3))
                .cwiseAbs()
                .maxCoeff(),
            1e-15);
}

TEST(Rotation, RandomShapesOrthonormalAndTangent) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> theta(0.0, kPi / 2);
  std::uniform_real_distribution<double> phi(-kPi, kPi);
  for (int i = 0; i < 2000; ++i) {
    const ShapeParams s{theta(rng), phi(rng)};
    const Rotation3 r = rotation_from_shape(s);
    EXPECT_LT((r.transpose() * r - Eigen::Matrix3d::Identity())
                  .cwiseAbs()
                  .maxCoeff(),
              1e-10);
    EXPECT_NEAR(r.determinant(), 1.0, 1e-10);
    const Eigen::Vector3d tangent(-std::cos(s.phi) * std::sin(s.theta),
                                  -std::sin(s.phi) * std::sin(s.theta),
                                  std::cos(s.theta));
    EXPECT_LT((r.col(2) - tangent).norm(), 1e-12);
    EXPECT_LT((r - oracle::rotation_by_composition(s.theta, s.phi))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
  }
}

TEST(MeasurementMap, ForcedValues) {
  Measurement z = measurement_map({0.0, 1.1});
  EXPECT_DOUBLE_EQ(z.gamma, 0.0);
  EXPECT_DOUBLE_EQ(z.beta, 0.0);
  z = measurement_map({kPi / 4, 0.0});
  EXPECT_NEAR(z.gamma, -kPi / 4, 1e-15);
  EXPECT_NEAR(z.beta, 0.0, 1e-15);
  z = measurement_map({kPi / 3, kPi / 2});
  EXPECT_NEAR(z.gamma, 0.0, 1e-15);
  EXPECT_NEAR(z.beta, kPi / 3, 1e-15);
}

TEST(MeasurementMap, AgreesWithAtanFormInsideWorkspace) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> theta(0.0, 1.55);
  std::uniform_real_distribution<double> phi(-kPi, kPi);
  for (int i = 0; i < 2000; ++i) {
    const double t = theta(rng), p = phi(rng);
    const Measurement a = measurement_map({t, p});
    const Measurement b = oracle::measurement(t, p);
    EXPECT_NEAR(a.gamma, b.gamma, 1e-12);
    EXPECT_NEAR(a.beta, b.beta, 1e-12);
  }
}

TEST(MeasurementMap, ContinuousThroughQuarterBend) {
  // In the phi = pi/2 plane beta tracks theta on both sides of pi/2.
  for (double t : {1.4, kPi / 2, 1.7, 2.5}) {
    const Measurement z = measurement_map({t, kPi / 2});
    EXPECT_NEAR(z.gamma, 0.0, 1e-15);
    EXPECT_NEAR(z.beta, t, 1e-14);
  }
}

TEST(InvertMeasurement, ForcedValues) {
  ShapeParams s = invert_measurement({0.0, 0.0});
  EXPECT_DOUBLE_EQ(s.theta, 0.0);
  EXPECT_DOUBLE_EQ(s.phi, 0.0);
  s = invert_measurement({0.0, kPi / 3});
  EXPECT_NEAR(s.theta, kPi / 3, 1e-15);
  EXPECT_NEAR(s.phi, kPi / 2, 1e-15);
}

TEST(InvertMeasurement, MatchesClosedForm) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> theta(0.01, 1.55);
  std::uniform_real_distribution<double> phi(-kPi, kPi);
  for (int i = 0; i < 1000; ++i) {
    const Measurement z = measurement_map({theta(rng), phi(rng)});
    const ShapeParams a = invert_measurement(z);
    const ShapeParams b = oracle::invert(z);
    EXPECT_NEAR(a.theta, b.theta, 1e-9);
    EXPECT_NEAR(wrap_angle(a.phi - b.phi), 0.0, 1e-9);
  }
}

TEST(InvertMeasurement, RoundTripBothWays) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> theta(1e-3, kPi / 2);
  std::uniform_real_distribution<double> phi(-kPi, kPi);
  for (int i = 0; i < 1000; ++i) {
    const ShapeParams s{theta(rng), phi(rng)};
    const Measurement z = measurement_map(s);
    const ShapeParams back = invert_measurement(z);
    EXPECT_NEAR(back.theta, s.theta, 1e-9);
    EXPECT_NEAR(wrap_angle(back.phi - s.phi), 0.0, 1e-9);
    const Measurement again = measurement_map(back);
    EXPECT_NEAR(again.gamma, z.gamma, 1e-9);
    EXPECT_NEAR(again.beta, z.beta, 1e-9);
  }
}

TEST(InvertMeasurement, AgreesWithGridSearch) {
  const ShapeParams spots[] = {
      {0.3, 0.4}, {1.2, -2.0}, {0.8, 2.9}, {1.5, 1.0}, {0.05, -0.7}};
  constexpr int kGrid = 2000;
  const double cell = 2.0 * kPi / kGrid;
  for (const ShapeParams& s : spots) {
    const Measurement z = measurement_map(s);
    const ShapeParams grid = oracle::grid_invert(z, kGrid);
    const ShapeParams exact = invert_measurement(z);
    EXPECT_NEAR(exact.theta, grid.theta, cell);
    EXPECT_NEAR(wrap_angle(exact.phi - grid.phi), 0.0, cell / std::sin(s.theta));
  }
}

TEST(InvertMeasurement, RejectsOutOfRange) {
  EXPECT_THROW(invert_measurement({2.0, 0.0}), InvalidArgument);
  EXPECT_THROW(invert_measurement({0.0, 3.5}), InvalidArgument);
  EXPECT_THROW(invert_measurement({NAN, 0.0}), InvalidArgument);
}

TEST(PositionJacobian, SeriesLimitColumn) {
  const auto j = position_jacobian({0.0, 0.0}, 1.0);
  EXPECT_NEAR(j(0, 0), -0.5, 1e-15);
  EXPECT_NEAR(j(1, 0), 0.0, 1e-15);
  EXPECT_NEAR(j(2, 0), 0.0, 1e-15);
}

TEST(PositionJacobian, AnalyticReferenceValues) {
  auto j = position_jacobian({kPi / 2, 0.0}, 1.0);
  EXPECT_NEAR(j(2, 0), -0.40528473456935108578, 1e-9);
  // 40-digit derivative at theta = 0.7, phi = 1.9, s = 0.5.
  j = position_jacobian({0.7, 1.9}, 0.5);
  Eigen::Matrix<double, 3, 2> ref;
  ref << 0.071187890340459332495, 0.15894989913790656859,
      -0.20837389689071233467, 0.054302905298118995857,
      -0.11104913891688689316, 0.0;
  EXPECT_LT((j - ref).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(PositionJacobian, MatchesAnalyticOracleOverWorkspace) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> theta(0.01, kPi / 2);
  std::uniform_real_distribution<double> phi(-kPi, kPi);
  for (int i = 0; i < 2000; ++i) {
    const double t = theta(rng), p = phi(rng);
    const auto j = position_jacobian({t, p}, 0.8);
    const auto ref = oracle::position_jacobian(t, p, 0.8);
    EXPECT_LE((j - ref).norm(), 1e-5 * ref.norm());
  }
}

TEST(RpyRotation, KnownCompositions) {
  EXPECT_TRUE(kinematics::rpy_rotation(0, 0, 0).isApprox(
      Eigen::Matrix3d::Identity()));
  Eigen::Matrix3d roll;
  roll << 1, 0, 0, 0, 0, -1, 0, 1, 0;
  EXPECT_LT((kinematics::rpy_rotation(kPi / 2, 0, 0) - roll).cwiseAbs().maxCoeff(),
            1e-15);
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> a(-kPi, kPi);
  for (int i = 0; i < 500; ++i) {
    const Rotation3 r = kinematics::rpy_rotation(a(rng), a(rng), a(rng));
    EXPECT_LT((r.transpose() * r - Eigen::Matrix3d::Identity())
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
  }
}

TEST(ChordLength, MatchesArcIdentity) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> theta(1e-4, kPi / 2);
  std::uniform_real_distribution<double> phi(-kPi, kPi);
  for (int i = 0; i < 2000; ++i) {
    const double t = theta(rng);
    const double chord = 2.0 * 1.3 * std::sin(0.5 * t) / t;
    EXPECT_NEAR(forward_position({t, phi(rng)}, 1.3).norm(), chord,
                1e-9 * chord);
  }
}

}  // namespace
}  // namespace ccmhe
