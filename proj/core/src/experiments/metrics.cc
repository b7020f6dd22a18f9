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
#include "ccmhe/experiments/metrics.h"

#include <cmath>

#include "ccmhe/errors.h"

namespace ccmhe::experiments {

double srmse(std::span<const RobotState> truth,
             std::span<const RobotState> estimates,
             SrmseComponents components) {
  if (truth.size() != estimates.size()) {
    throw InvalidArgument("srmse: series lengths differ");
  }
  if (truth.empty()) throw InvalidArgument("srmse: empty series");
  const int dims = components == SrmseComponents::kFullState ? kStateDim : 3;
  Vector5d sum_sq = Vector5d::Zero();
  for (std::size_t k = 0; k < truth.size(); ++k) {
    Vector5d e = estimates[k].to_vector() - truth[k].to_vector();
    e(kPhi) = wrap_angle(e(kPhi));
    sum_sq += e.cwiseAbs2();
  }
  const double n = static_cast<double>(truth.size());
  double total = 0.0;
  for (int i = 0; i < dims; ++i) total += std::sqrt(sum_sq(i) / n);
  return total;
}

}  // namespace ccmhe::experiments
