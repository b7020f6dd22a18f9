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
#ifndef CCMHE_EXPERIMENTS_MEASUREMENT_LOG_H_
#define CCMHE_EXPERIMENTS_MEASUREMENT_LOG_H_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ccmhe/types.h"

// Plain-text logs. Measurement logs have the header `t,gamma,beta`; state logs
// have `t,x,y,z,theta,phi`. One sample per row, comma separated, LF line
// endings, angles in radians unless a reader is told otherwise.
namespace ccmhe::experiments {

struct MeasurementLog {
  std::vector<double> times;
  std::vector<Measurement> measurements;

  // Median gap between consecutive timestamps. Throws ValidationError for
  // fewer than two samples.
  double sample_time() const;
};

struct StateLog {
  std::vector<double> times;
  std::vector<RobotState> states;
};

// Throws ParseError (with line number) on malformed rows and ValidationError
// on an empty log or non-increasing timestamps. With `degrees`, the angle
// columns are converted to radians.
MeasurementLog parse_measurement_log(std::istream& in, bool degrees = false);
MeasurementLog read_measurement_log(const std::filesystem::path& path,
                                    bool degrees = false);

std::string format_measurement_log(std::span<const double> times,
                                   std::span<const Measurement> measurements);
void write_measurement_log(const std::filesystem::path& path,
                           std::span<const double> times,
                           std::span<const Measurement> measurements);

StateLog parse_state_log(std::istream& in);
StateLog read_state_log(const std::filesystem::path& path);
std::string format_state_log(std::span<const double> times,
                             std::span<const RobotState> states);

// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

// Writes `text` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace ccmhe::experiments

#endif  // CCMHE_EXPERIMENTS_MEASUREMENT_LOG_H_
