// Copyright 2026 The IFCTP Solver Authors
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

// Line-oriented problem files:
//
//   # comment
//   dims 3 4
//   cost 1 1 = [4,8] fixed [10,30]
//   supply 1 = [30,33]
//   demand 1 = [20,21]
//
// Indices are 1-based. `dims` must precede every other statement.

#ifndef IFCTP_PROBLEM_FILE_H_
#define IFCTP_PROBLEM_FILE_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "ifctp/problem.h"

namespace ifctp {

enum class ParseErrorKind {
  kSyntax,
  kMalformedInterval,
  kDimensionMismatch,
  kValidation,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& message);

  ParseErrorKind kind() const { return kind_; }
  // 1-based line of the offending statement; 0 when not tied to a line.
  int line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  ParseErrorKind kind_;
  int line_;
  std::string detail_;
};

// Parses and validates an instance.
IfctpInstance ParseInstance(std::string_view text);

IfctpInstance LoadInstance(const std::string& path);

std::string RenderInstance(const IfctpInstance& instance);

// Parses "[lo,hi]" (whitespace allowed around the numbers).
Interval ParseInterval(std::string_view text);

// Shortest decimal representation that round-trips.
std::string FormatNumber(double value);

}  // namespace ifctp

#endif  // IFCTP_PROBLEM_FILE_H_
