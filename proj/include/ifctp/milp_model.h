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

// Canonical model shared by the LP core, branch-and-bound and the
// enumeration oracle. Everything here is dense and sized for desk-scale
// problems (tens of variables and rows).

#ifndef IFCTP_MILP_MODEL_H_
#define IFCTP_MILP_MODEL_H_

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifctp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Relation { kLessEqual, kGreaterEqual, kEqual };
enum class Sense { kMinimize, kMaximize };

struct Variable {
  std::string name;
  double lower = 0.0;
  double upper = kInfinity;
  bool binary = false;
};

struct LinearTerm {
  int variable = 0;
  double coefficient = 0.0;
};

struct Constraint {
  std::string name;
  std::vector<LinearTerm> terms;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

// Per-variable bounds used to override the model's own bounds, e.g. when
// branch-and-bound fixes a binary.
struct VariableBounds {
  double lower = 0.0;
  double upper = kInfinity;
};

class InvalidModel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MilpModel {
 public:
  MilpModel() = default;
  explicit MilpModel(Sense sense) : sense_(sense) {}

  int AddContinuous(std::string name, double lower, double upper,
                    double objective = 0.0);
  int AddBinary(std::string name, double objective = 0.0);
  void AddConstraint(Constraint row);

  void set_sense(Sense sense) { sense_ = sense; }
  void set_objective(int variable, double coefficient);
  void set_objective_constant(double c) { objective_constant_ = c; }
  void set_bounds(int variable, double lower, double upper);

  Sense sense() const { return sense_; }
  const std::vector<double>& objective() const { return objective_; }
  double objective_constant() const { return objective_constant_; }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_binaries() const;
  std::vector<int> binary_indices() const;

  // Objective value of `values` including the constant term.
  double Evaluate(const std::vector<double>& values) const;

  // Largest violation of rows or bounds at `values`; 0 when feasible.
  double MaxViolation(const std::vector<double>& values) const;

  std::vector<VariableBounds> bounds() const;

  // Throws InvalidModel on non-finite coefficients, unknown variable
  // indices, binaries with bounds outside [0,1], an empty row list or a
  // lower bound of -infinity.
  void Validate() const;

 private:
  Sense sense_ = Sense::kMinimize;
  std::vector<double> objective_;
  double objective_constant_ = 0.0;
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
};

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded };

std::string ToString(SolveStatus status);

struct SolveStats {
  std::int64_t nodes = 0;
  std::int64_t lp_solves = 0;
  std::int64_t pivots = 0;
};

struct MilpSolution {
  SolveStatus status = SolveStatus::kInfeasible;
  double objective_value = 0.0;
  std::vector<double> values;
  SolveStats stats;

  bool optimal() const { return status == SolveStatus::kOptimal; }
};

// Pivoting broke down even under Bland's rule.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Node or iteration budget exhausted.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The enumeration oracle refuses models with too many binaries.
class OracleOutOfScope : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LpOptions {
  double feasibility_tolerance = 1e-7;
  double optimality_tolerance = 1e-9;
  double pivot_tolerance = 1e-10;
  int degenerate_limit = 500;  // consecutive degenerate pivots before Bland
  int iteration_limit = 100000;
};

struct MilpOptions {
  LpOptions lp;
  double integrality_tolerance = 1e-6;
  double improvement_tolerance = 1e-9;
  std::int64_t node_limit = 1000000;
};

// Solves the continuous relaxation (binaries relaxed to [0,1]).
MilpSolution SolveLp(const MilpModel& model, const LpOptions& options = {});

// Same, with the model's variable bounds replaced by `bounds`.
MilpSolution SolveLp(const MilpModel& model,
                     const std::vector<VariableBounds>& bounds,
                     const LpOptions& options = {});

// Best-bound branch-and-bound over the binaries.
MilpSolution SolveMilp(const MilpModel& model,
                       const MilpOptions& options = {});

inline constexpr int kOracleMaxBinaries = 20;

// Enumerates all 2^k binary patterns and solves the remaining LP for each.
MilpSolution OracleSolve(const MilpModel& model,
                         int max_binaries = kOracleMaxBinaries,
                         const LpOptions& options = {});

// |a - b| / max(1, |a|, |b|).
double RelativeGap(double a, double b);

}  // namespace ifctp

#endif  // IFCTP_MILP_MODEL_H_
