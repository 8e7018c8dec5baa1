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

#include <algorithm>
#include <cmath>

#include "ifctp/milp_model.h"

namespace ifctp {

int MilpModel::AddContinuous(std::string name, double lower, double upper,
                             double objective) {
  variables_.push_back({std::move(name), lower, upper, false});
  objective_.push_back(objective);
  return num_variables() - 1;
}

int MilpModel::AddBinary(std::string name, double objective) {
  variables_.push_back({std::move(name), 0.0, 1.0, true});
  objective_.push_back(objective);
  return num_variables() - 1;
}

void MilpModel::AddConstraint(Constraint row) {
  constraints_.push_back(std::move(row));
}

void MilpModel::set_objective(int variable, double coefficient) {
  objective_.at(variable) = coefficient;
}

void MilpModel::set_bounds(int variable, double lower, double upper) {
  variables_.at(variable).lower = lower;
  variables_.at(variable).upper = upper;
}

int MilpModel::num_binaries() const {
  return static_cast<int>(std::count_if(
      variables_.begin(), variables_.end(),
      [](const Variable& v) { return v.binary; }));
}

std::vector<int> MilpModel::binary_indices() const {
  std::vector<int> out;
  for (int k = 0; k < num_variables(); ++k) {
    if (variables_[k].binary) out.push_back(k);
  }
  return out;
}

double MilpModel::Evaluate(const std::vector<double>& values) const {
  double total = objective_constant_;
  for (int k = 0; k < num_variables(); ++k) total += objective_[k] * values[k];
  return total;
}

double MilpModel::MaxViolation(const std::vector<double>& values) const {
  double worst = 0.0;
  for (int k = 0; k < num_variables(); ++k) {
    worst = std::max(worst, variables_[k].lower - values[k]);
    worst = std::max(worst, values[k] - variables_[k].upper);
  }
  for (const Constraint& row : constraints_) {
    double lhs = 0.0;
    for (const LinearTerm& t : row.terms) {
      lhs += t.coefficient * values[t.variable];
    }
    switch (row.relation) {
      case Relation::kLessEqual:
        worst = std::max(worst, lhs - row.rhs);
        break;
      case Relation::kGreaterEqual:
        worst = std::max(worst, row.rhs - lhs);
        break;
      case Relation::kEqual:
        worst = std::max(worst, std::fabs(lhs - row.rhs));
        break;
    }
  }
  return worst;
}

std::vector<VariableBounds> MilpModel::bounds() const {
  std::vector<VariableBounds> out;
  out.reserve(variables_.size());
  for (const Variable& v : variables_) out.push_back({v.lower, v.upper});
  return out;
}

void MilpModel::Validate() const {
  if (constraints_.empty()) throw InvalidModel("model has no constraints");
  for (int k = 0; k < num_variables(); ++k) {
    const Variable& v = variables_[k];
    if (!std::isfinite(objective_[k])) {
      throw InvalidModel("non-finite objective coefficient on " + v.name);
    }
    if (std::isnan(v.lower) || std::isnan(v.upper) || v.lower == -kInfinity) {
      throw InvalidModel("variable " + v.name + " needs a finite lower bound");
    }
    if (v.lower > v.upper) {
      throw InvalidModel("variable " + v.name + " has lower > upper");
    }
    if (v.binary && (v.lower < 0.0 || v.upper > 1.0)) {
      throw InvalidModel("binary " + v.name + " has bounds outside [0,1]");
    }
  }
  for (const Constraint& row : constraints_) {
    if (!std::isfinite(row.rhs)) {
      throw InvalidModel("non-finite rhs in row " + row.name);
    }
    for (const LinearTerm& t : row.terms) {
      if (t.variable < 0 || t.variable >= num_variables()) {
        throw InvalidModel("row " + row.name + " references unknown variable");
      }
      if (!std::isfinite(t.coefficient)) {
        throw InvalidModel("non-finite coefficient in row " + row.name);
      }
    }
  }
}

std::string ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

double RelativeGap(double a, double b) {
  return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)});
}

}  // namespace ifctp
