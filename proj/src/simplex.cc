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

// Dense two-phase primal simplex. Variables are shifted to a zero lower
// bound, finite upper bounds become explicit rows, and variables whose
// bounds coincide are substituted out before the tableau is built.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "ifctp/milp_model.h"

namespace ifctp {
namespace {

constexpr double kFixedWidth = 1e-12;
constexpr double kDegenerateStep = 1e-12;

struct StandardRow {
  std::vector<double> coefficients;
  Relation relation;
  double rhs;
};

enum class PhaseResult { kOptimal, kUnbounded };

class Tableau {
 public:
  Tableau(int rows, int cols) : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows + 1) * (cols + 1), 0.0),
      basis_(rows, -1) {}

  double& at(int r, int c) { return data_[r * (cols_ + 1) + c]; }
  double at(int r, int c) const { return data_[r * (cols_ + 1) + c]; }
  double& rhs(int r) { return at(r, cols_); }
  double rhs(int r) const { return at(r, cols_); }
  // Row `rows_` holds reduced costs; its rhs slot holds -objective.
  double& cost(int c) { return at(rows_, c); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::vector<int>& basis() { return basis_; }
  const std::vector<int>& basis() const { return basis_; }

  void Pivot(int pr, int pc) {
    const double p = at(pr, pc);
    for (int c = 0; c <= cols_; ++c) at(pr, c) /= p;
    at(pr, pc) = 1.0;
    for (int r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (int c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
  }

  void PriceOut(const std::vector<double>& costs) {
    for (int c = 0; c <= cols_; ++c) cost(c) = c < cols_ ? costs[c] : 0.0;
    for (int r = 0; r < rows_; ++r) {
      const double cb = costs[basis_[r]];
      if (cb == 0.0) continue;
      for (int c = 0; c <= cols_; ++c) cost(c) -= cb * at(r, c);
    }
  }

  double objective() const { return -at(rows_, cols_); }

  void DropRow(int r) {
    // Move the last constraint row into slot r, then the cost row down.
    const int last = rows_ - 1;
    if (r != last) {
      for (int c = 0; c <= cols_; ++c) at(r, c) = at(last, c);
      basis_[r] = basis_[last];
    }
    for (int c = 0; c <= cols_; ++c) at(last, c) = at(rows_, c);
    basis_.pop_back();
    --rows_;
    data_.resize(static_cast<std::size_t>(rows_ + 1) * (cols_ + 1));
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
  std::vector<int> basis_;
};

class SimplexRunner {
 public:
  SimplexRunner(Tableau& t, const LpOptions& options, std::int64_t& pivots)
      : t_(t), options_(options), pivots_(pivots) {}

  PhaseResult Run(const std::vector<char>& allowed) {
    bool bland = false;
    int degenerate_run = 0;
    for (int iter = 0;; ++iter) {
      if (iter >= options_.iteration_limit) {
        throw NumericalError("simplex did not converge within " +
                             std::to_string(options_.iteration_limit) +
                             " pivots");
      }
      const int entering = ChooseEntering(allowed, bland);
      if (entering < 0) return PhaseResult::kOptimal;
      const int leaving = ChooseLeaving(entering, bland);
      if (leaving < 0) return PhaseResult::kUnbounded;
      if (t_.rhs(leaving) <= kDegenerateStep) {
        if (++degenerate_run >= options_.degenerate_limit) bland = true;
      } else {
        degenerate_run = 0;
      }
      t_.Pivot(leaving, entering);
      ++pivots_;
      for (int r = 0; r < t_.rows(); ++r) {
        if (t_.rhs(r) < 0.0 && t_.rhs(r) > -options_.feasibility_tolerance) {
          t_.rhs(r) = 0.0;
        }
      }
    }
  }

 private:
  int ChooseEntering(const std::vector<char>& allowed, bool bland) {
    int best = -1;
    double best_cost = -options_.optimality_tolerance;
    for (int c = 0; c < t_.cols(); ++c) {
      if (!allowed[c]) continue;
      const double d = t_.cost(c);
      if (d < best_cost) {
        best = c;
        if (bland) break;
        best_cost = d;
      }
    }
    return best;
  }

  int ChooseLeaving(int entering, bool bland) {
    int best = -1;
    double best_ratio = kInfinity;
    for (int r = 0; r < t_.rows(); ++r) {
      const double a = t_.at(r, entering);
      if (a <= options_.pivot_tolerance) continue;
      const double ratio = t_.rhs(r) / a;
      if (best < 0 || ratio < best_ratio - 1e-12) {
        best = r;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + 1e-12) {
        const bool take =
            bland ? t_.basis()[r] < t_.basis()[best]
                  : a > t_.at(best, entering) ||
                        (a == t_.at(best, entering) &&
                         t_.basis()[r] < t_.basis()[best]);
        if (take) {
          best = r;
          best_ratio = std::min(best_ratio, ratio);
        }
      }
    }
    return best;
  }

  Tableau& t_;
  const LpOptions& options_;
  std::int64_t& pivots_;
};

bool EmptyRowFeasible(Relation relation, double rhs, double tol) {
  switch (relation) {
    case Relation::kLessEqual:
      return 0.0 <= rhs + tol;
    case Relation::kGreaterEqual:
      return 0.0 >= rhs - tol;
    case Relation::kEqual:
      return std::fabs(rhs) <= tol;
  }
  return false;
}

}  // namespace

MilpSolution SolveLp(const MilpModel& model, const LpOptions& options) {
  return SolveLp(model, model.bounds(), options);
}

MilpSolution SolveLp(const MilpModel& model,
                     const std::vector<VariableBounds>& bounds,
                     const LpOptions& options) {
  model.Validate();
  const int n = model.num_variables();
  if (static_cast<int>(bounds.size()) != n) {
    throw InvalidModel("bounds override has the wrong length");
  }

  MilpSolution solution;
  solution.stats.lp_solves = 1;
  for (const VariableBounds& b : bounds) {
    if (b.lower == -kInfinity || std::isnan(b.lower)) {
      throw InvalidModel("variable needs a finite lower bound");
    }
    if (b.lower > b.upper) {
      solution.status = SolveStatus::kInfeasible;
      return solution;
    }
  }

  // Column map: -1 for substituted (fixed) variables.
  std::vector<int> column(n, -1);
  std::vector<int> var_of_column;
  for (int k = 0; k < n; ++k) {
    if (bounds[k].upper - bounds[k].lower > kFixedWidth) {
      column[k] = static_cast<int>(var_of_column.size());
      var_of_column.push_back(k);
    }
  }
  const int structural = static_cast<int>(var_of_column.size());

  std::vector<StandardRow> rows;
  const double tol = options.feasibility_tolerance;
  for (const Constraint& c : model.constraints()) {
    StandardRow row{std::vector<double>(structural, 0.0), c.relation, c.rhs};
    bool empty = true;
    for (const LinearTerm& term : c.terms) {
      row.rhs -= term.coefficient * bounds[term.variable].lower;
      const int col = column[term.variable];
      if (col >= 0 && term.coefficient != 0.0) {
        row.coefficients[col] += term.coefficient;
        empty = false;
      }
    }
    if (empty) {
      if (!EmptyRowFeasible(row.relation, row.rhs, tol)) {
        solution.status = SolveStatus::kInfeasible;
        return solution;
      }
      continue;
    }
    rows.push_back(std::move(row));
  }
  for (int col = 0; col < structural; ++col) {
    const VariableBounds& b = bounds[var_of_column[col]];
    if (b.upper < kInfinity) {
      StandardRow row{std::vector<double>(structural, 0.0),
                      Relation::kLessEqual, b.upper - b.lower};
      row.coefficients[col] = 1.0;
      rows.push_back(std::move(row));
    }
  }
  for (StandardRow& row : rows) {
    if (row.rhs < 0.0) {
      for (double& a : row.coefficients) a = -a;
      row.rhs = -row.rhs;
      if (row.relation == Relation::kLessEqual) {
        row.relation = Relation::kGreaterEqual;
      } else if (row.relation == Relation::kGreaterEqual) {
        row.relation = Relation::kLessEqual;
      }
    }
  }

  const int m = static_cast<int>(rows.size());
  int slacks = 0;
  int artificials = 0;
  for (const StandardRow& row : rows) {
    if (row.relation != Relation::kEqual) ++slacks;
    if (row.relation != Relation::kLessEqual) ++artificials;
  }
  const int total = structural + slacks + artificials;
  Tableau tableau(m, total);
  std::vector<char> is_artificial(total, 0);
  {
    int next_slack = structural;
    int next_artificial = structural + slacks;
    for (int r = 0; r < m; ++r) {
      const StandardRow& row = rows[r];
      for (int c = 0; c < structural; ++c) tableau.at(r, c) = row.coefficients[c];
      tableau.rhs(r) = row.rhs;
      switch (row.relation) {
        case Relation::kLessEqual:
          tableau.at(r, next_slack) = 1.0;
          tableau.basis()[r] = next_slack++;
          break;
        case Relation::kGreaterEqual:
          tableau.at(r, next_slack++) = -1.0;
          tableau.at(r, next_artificial) = 1.0;
          is_artificial[next_artificial] = 1;
          tableau.basis()[r] = next_artificial++;
          break;
        case Relation::kEqual:
          tableau.at(r, next_artificial) = 1.0;
          is_artificial[next_artificial] = 1;
          tableau.basis()[r] = next_artificial++;
          break;
      }
    }
  }

  std::int64_t pivots = 0;
  SimplexRunner runner(tableau, options, pivots);

  if (artificials > 0) {
    std::vector<double> phase1(total, 0.0);
    for (int c = 0; c < total; ++c) phase1[c] = is_artificial[c] ? 1.0 : 0.0;
    tableau.PriceOut(phase1);
    std::vector<char> allowed(total, 1);
    runner.Run(allowed);
    double scale = 1.0;
    for (const StandardRow& row : rows) scale = std::max(scale, row.rhs);
    if (tableau.objective() > tol * scale) {
      solution.status = SolveStatus::kInfeasible;
      solution.stats.pivots = pivots;
      return solution;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (int r = 0; r < tableau.rows();) {
      if (!is_artificial[tableau.basis()[r]]) {
        ++r;
        continue;
      }
      int best = -1;
      double best_abs = 1e-9;
      for (int c = 0; c < total; ++c) {
        if (is_artificial[c]) continue;
        if (std::fabs(tableau.at(r, c)) > best_abs) {
          best = c;
          best_abs = std::fabs(tableau.at(r, c));
        }
      }
      if (best >= 0) {
        tableau.Pivot(r, best);
        ++pivots;
        ++r;
      } else {
        tableau.DropRow(r);
      }
    }
  }

  const double sign = model.sense() == Sense::kMaximize ? -1.0 : 1.0;
  std::vector<double> phase2(total, 0.0);
  for (int col = 0; col < structural; ++col) {
    phase2[col] = sign * model.objective()[var_of_column[col]];
  }
  tableau.PriceOut(phase2);
  std::vector<char> allowed(total, 1);
  for (int c = 0; c < total; ++c) allowed[c] = !is_artificial[c];
  const PhaseResult result = runner.Run(allowed);
  solution.stats.pivots = pivots;
  if (result == PhaseResult::kUnbounded) {
    solution.status = SolveStatus::kUnbounded;
    return solution;
  }

  std::vector<double> shifted(total, 0.0);
  for (int r = 0; r < tableau.rows(); ++r) {
    shifted[tableau.basis()[r]] = std::max(0.0, tableau.rhs(r));
  }
  solution.values.resize(n);
  for (int k = 0; k < n; ++k) {
    solution.values[k] = bounds[k].lower;
    if (column[k] >= 0) {
      solution.values[k] += shifted[column[k]];
      solution.values[k] = std::min(solution.values[k], bounds[k].upper);
    }
  }
  solution.status = SolveStatus::kOptimal;
  solution.objective_value = model.Evaluate(solution.values);
  return solution;
}

}  // namespace ifctp
