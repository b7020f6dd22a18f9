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

#ifndef CCMHE_ERRORS_H_
#define CCMHE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>

namespace ccmhe {

// Bad argument to a library call: wrong lengths, non-finite input, values
// outside a documented domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Semantically invalid data or configuration (empty log, non-monotone time,
// inconsistent bounds).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. Carries the 1-based line number of the offending row.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A numerical routine could not proceed, e.g. a residual evaluated to NaN or
// an innovation covariance was singular. Optionally carries the iterate that
// triggered the failure.
class NumericFailure : public std::runtime_error {
 public:
  explicit NumericFailure(const std::string& what)
      : std::runtime_error(what) {}
  NumericFailure(const std::string& what, Eigen::VectorXd iterate)
      : std::runtime_error(what), iterate_(std::move(iterate)) {}
  const Eigen::VectorXd& iterate() const { return iterate_; }

 private:
  Eigen::VectorXd iterate_;
};

// File system failure (cannot open, read or write).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ccmhe

#endif  // CCMHE_ERRORS_H_
