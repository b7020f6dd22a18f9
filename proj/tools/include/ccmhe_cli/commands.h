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

#ifndef CCMHE_CLI_COMMANDS_H_
#define CCMHE_CLI_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "ccmhe/config.h"

namespace ccmhe::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidation = 1,
  kNumeric = 2,
  kIo = 3,
};

enum class EstimatorChoice { kMhe, kEkf, kBoth };

struct CommonOptions {
  std::optional<std::filesystem::path> config_path;
  std::filesystem::path out_dir = ".";
  std::optional<std::uint64_t> seed;
  bool degrees = false;
};

// Built-in defaults, then the config file, then command-line overrides.
EstimatorConfig effective_config(const CommonOptions& options);

// Writes truth.csv, clean.csv, noisy.csv, one noisy log per Monte-Carlo
// scenario under scenarios/, and generate.json.
void cmd_generate(const CommonOptions& options, std::ostream& log);

// `truth` is an optional state log (t,x,y,z,theta,phi) used for scoring.
void cmd_estimate(const CommonOptions& options,
                  const std::filesystem::path& measurements,
                  EstimatorChoice estimator,
                  const std::optional<std::filesystem::path>& truth,
                  std::ostream& log);

// Both return false when at least one row failed; the tables are still
// written.
bool cmd_montecarlo(const CommonOptions& options, std::ostream& log);
bool cmd_horizon_sweep(const CommonOptions& options, std::ostream& log);

// Parses argv, runs the subcommand and maps exceptions to exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace ccmhe::cli

#endif  // CCMHE_CLI_COMMANDS_H_
