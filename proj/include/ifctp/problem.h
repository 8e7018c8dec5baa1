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

// Data model for fixed-charge transportation problems with crisp or
// interval-valued costs, fixed charges, supplies and demands.

#ifndef IFCTP_PROBLEM_H_
#define IFCTP_PROBLEM_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ifctp/interval.h"

namespace ifctp {

// Dense row-major matrix indexed from zero.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Interval fixed-charge transportation problem with m sources and n
// destinations.
struct IfctpInstance {
  std::size_t sources = 0;
  std::size_t destinations = 0;
  Matrix<Interval> unit_cost;     // m x n, per unit shipped
  Matrix<Interval> fixed_charge;  // m x n, once per active route
  std::vector<Interval> supply;   // m
  std::vector<Interval> demand;   // n

  friend bool operator==(const IfctpInstance&, const IfctpInstance&) = default;
};

// Crisp fixed-charge transportation problem.
struct FctpInstance {
  std::size_t sources = 0;
  std::size_t destinations = 0;
  Matrix<double> unit_cost;
  Matrix<double> fixed_charge;
  std::vector<double> supply;
  std::vector<double> demand;
};

// Lifts a crisp instance to the interval model with degenerate intervals.
IfctpInstance ToIntervalInstance(const FctpInstance& crisp);

// Zero-width copy of `instance`: unit costs and fixed charges collapse to
// their centers, supplies to their upper limits and demands to their lower
// limits, so the transport constraints are unchanged.
IfctpInstance ZeroWidthCopy(const IfctpInstance& instance);

// Shipped quantities and route activations.
struct ShipmentPlan {
  Matrix<double> quantity;  // y
  Matrix<int> active;       // x, 0 or 1

  ShipmentPlan() = default;
  ShipmentPlan(std::size_t sources, std::size_t destinations)
      : quantity(sources, destinations, 0.0),
        active(sources, destinations, 0) {}

  // Sets x_ij = 1 exactly where y_ij > tolerance.
  void DeriveActivations(double tolerance);
};

struct Violation {
  std::string field;
  std::string rule;

  std::string ToString() const { return field + ": " + rule; }
  friend bool operator==(const Violation&, const Violation&) = default;
};

inline constexpr double kDefaultFeasibilityTolerance = 1e-6;

// Structural checks plus the aggregate condition sum(supply.hi) >=
// sum(demand.lo). Violations are reported in row-major order.
std::vector<Violation> Validate(const IfctpInstance& instance);

// Raised when a plan's dimensions do not match the instance.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Checks a plan against supply caps (upper limits), demand floors (lower
// limits) and the y/x linking rule.
std::vector<Violation> CheckPlan(
    const IfctpInstance& instance, const ShipmentPlan& plan,
    double tolerance = kDefaultFeasibilityTolerance);

// "t(1,2)" style 1-based cell label.
std::string CellLabel(const std::string& name, std::size_t i, std::size_t j);

}  // namespace ifctp

#endif  // IFCTP_PROBLEM_H_
