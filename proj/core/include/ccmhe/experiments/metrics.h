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
#ifndef CCMHE_EXPERIMENTS_METRICS_H_
#define CCMHE_EXPERIMENTS_METRICS_H_

#include <span>

#include "ccmhe/types.h"

namespace ccmhe::experiments {

enum class SrmseComponents { kFullState, kPositionOnly };

// Sum over state components of the per-component RMS error. Angle errors are
// wrapped into (-pi, pi]. Throws InvalidArgument on empty or mismatched
// series.
double srmse(std::span<const RobotState> truth,
             std::span<const RobotState> estimates,
             SrmseComponents components = SrmseComponents::kFullState);

}  // namespace ccmhe::experiments

#endif  // CCMHE_EXPERIMENTS_METRICS_H_
