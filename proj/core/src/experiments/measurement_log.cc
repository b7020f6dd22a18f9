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
#include "ccmhe/experiments/measurement_log.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string_view>

#include "ccmhe/errors.h"

namespace ccmhe::experiments {
namespace {

std::vector<double> parse_row(std::string_view line, std::size_t columns,
                              std::size_t line_no) {
  std::vector<double> values;
  values.reserve(columns);
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    std::string_view field = line.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    double value = 0.0;
    const auto [end, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
      throw ParseError(line_no, "cannot parse field '" + std::string(field) + "'");
    }
    if (!std::isfinite(value)) {
      throw ParseError(line_no, "non-finite value");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (values.size() != columns) {
    throw ParseError(line_no, "expected " + std::to_string(columns) +
                                  " fields, found " +
                                  std::to_string(values.size()));
  }
  return values;
}

// Calls on_row(values, line_no) for every data row after checking the header.
template <typename OnRow>
void parse_table(std::istream& in, std::string_view header, std::size_t columns,
                 OnRow on_row) {
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!seen_header) {
      if (line != header) {
        throw ParseError(line_no, "expected header '" + std::string(header) + "'");
      }
      seen_header = true;
      continue;
    }
    on_row(parse_row(line, columns, line_no), line_no);
  }
  if (!seen_header) throw ValidationError("log is empty");
}

void check_monotone(const std::vector<double>& times, double t,
                    std::size_t line_no) {
  if (!times.empty() && !(t > times.back())) {
    throw ValidationError("line " + std::to_string(line_no) +
                          ": timestamps must be strictly increasing");
  }
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

}  // namespace

double MeasurementLog::sample_time() const {
  if (times.size() < 2) {
    throw ValidationError("need two samples to infer the sample time");
  }
  std::vector<double> gaps;
  gaps.reserve(times.size() - 1);
  for (std::size_t k = 1; k < times.size(); ++k) {
    gaps.push_back(times[k] - times[k - 1]);
  }
  const std::size_t mid = gaps.size() / 2;
  std::nth_element(gaps.begin(), gaps.begin() + mid, gaps.end());
  if (gaps.size() % 2 == 1) return gaps[mid];
  const double upper = gaps[mid];
  const double lower = *std::max_element(gaps.begin(), gaps.begin() + mid);
  return 0.5 * (lower + upper);
}

MeasurementLog parse_measurement_log(std::istream& in, bool degrees) {
  MeasurementLog log;
  const double unit = degrees ? kDegToRad : 1.0;
  parse_table(in, "t,gamma,beta", 3,
              [&](const std::vector<double>& v, std::size_t line_no) {
                check_monotone(log.times, v[0], line_no);
                log.times.push_back(v[0]);
                log.measurements.push_back({unit * v[1], unit * v[2]});
              });
  if (log.times.empty()) throw ValidationError("log has no samples");
  return log;
}

MeasurementLog read_measurement_log(const std::filesystem::path& path,
                                    bool degrees) {
  std::ifstream in = open_for_read(path);
  return parse_measurement_log(in, degrees);
}

std::string format_double(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ec == std::errc() ? end : buf);
}

std::string format_measurement_log(std::span<const double> times,
                                   std::span<const Measurement> measurements) {
  if (times.size() != measurements.size()) {
    throw InvalidArgument("measurement log: column lengths differ");
  }
  std::string out = "t,gamma,beta\n";
  for (std::size_t k = 0; k < times.size(); ++k) {
    out += format_double(times[k]) + ',' + format_double(measurements[k].gamma) +
           ',' + format_double(measurements[k].beta) + '\n';
  }
  return out;
}

void write_measurement_log(const std::filesystem::path& path,
                           std::span<const double> times,
                           std::span<const Measurement> measurements) {
  write_text_file(path, format_measurement_log(times, measurements));
}

StateLog parse_state_log(std::istream& in) {
  StateLog log;
  parse_table(in, "t,x,y,z,theta,phi", 6,
              [&](const std::vector<double>& v, std::size_t line_no) {
                check_monotone(log.times, v[0], line_no);
                log.times.push_back(v[0]);
                log.states.push_back(
                    {Eigen::Vector3d(v[1], v[2], v[3]), ShapeParams{v[4], v[5]}});
              });
  if (log.times.empty()) throw ValidationError("log has no samples");
  return log;
}

StateLog read_state_log(const std::filesystem::path& path) {
  std::ifstream in = open_for_read(path);
  return parse_state_log(in);
}

std::string format_state_log(std::span<const double> times,
                             std::span<const RobotState> states) {
  if (times.size() != states.size()) {
    throw InvalidArgument("state log: column lengths differ");
  }
  std::string out = "t,x,y,z,theta,phi\n";
  for (std::size_t k = 0; k < times.size(); ++k) {
    const Vector5d v = states[k].to_vector();
    out += format_double(times[k]);
    for (int i = 0; i < kStateDim; ++i) out += ',' + format_double(v(i));
    out += '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create directory '" + path.parent_path().string() +
                    "': " + ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace ccmhe::experiments
