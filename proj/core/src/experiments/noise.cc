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
#include "ccmhe/experiments/noise.h"

#include <cmath>
#include <random>

#include "ccmhe/errors.h"

namespace ccmhe::experiments {

std::vector<Measurement> add_noise(std::span<const Measurement> clean,
                                   double sigma_beta, double sigma_gamma,
                                   std::uint64_t seed) {
  if (!std::isfinite(sigma_beta) || !std::isfinite(sigma_gamma)) {
    throw InvalidArgument("add_noise: noise levels must be finite");
  }
  const double sb = std::abs(sigma_beta);
  const double sg = std::abs(sigma_gamma);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> unit(0.0, 1.0);
  std::vector<Measurement> out(clean.begin(), clean.end());
  for (Measurement& z : out) {
    const double ng = unit(rng);
    const double nb = unit(rng);
    z.gamma += sg * ng;
    z.beta += sb * nb;
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace ccmhe::experiments
