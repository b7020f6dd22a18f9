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
#ifndef CCMHE_EXPERIMENTS_NOISE_H_
#define CCMHE_EXPERIMENTS_NOISE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "ccmhe/types.h"

namespace ccmhe::experiments {

// Adds zero-mean Gaussian noise with standard deviations |sigma_beta| and
// |sigma_gamma| (radians). The stream is a 64-bit Mersenne Twister seeded
// with `seed`; per sample, gamma is drawn before beta.
std::vector<Measurement> add_noise(std::span<const Measurement> clean,
                                   double sigma_beta, double sigma_gamma,
                                   std::uint64_t seed);

// Independent per-scenario seed from a master seed (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace ccmhe::experiments

#endif  // CCMHE_EXPERIMENTS_NOISE_H_
