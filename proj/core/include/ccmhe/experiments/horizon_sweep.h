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
#ifndef CCMHE_EXPERIMENTS_HORIZON_SWEEP_H_
#define CCMHE_EXPERIMENTS_HORIZON_SWEEP_H_

#include <string>
#include <vector>

#include "ccmhe/config.h"

namespace ccmhe::experiments {

struct HorizonRow {
  int horizon = 0;
  bool ok = false;
  std::string error;
  double srmse = 0.0;
  int solve_count = 0;
  double mean_solve_seconds = 0.0;
  double total_seconds = 0.0;
};

// MHE over the same readings (config.noise, seed derived from config.seed)
// for every horizon in config.sweep_horizons. All rows are scored on the
// samples every horizon covers, i.e. from max(N) - 1 on. Throws
// ValidationError for an empty list or a horizon not below the sample count.
std::vector<HorizonRow> run_horizon_sweep(const EstimatorConfig& config);

}  // namespace ccmhe::experiments

#endif  // CCMHE_EXPERIMENTS_HORIZON_SWEEP_H_
