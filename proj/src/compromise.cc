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

#include "ifctp/compromise.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace ifctp {
namespace {

double CapSlack(double value) { return 1e-9 * std::max(1.0, std::fabs(value)); }

MilpSolution SolveOrThrow(const MilpModel& model, const MilpOptions& options,
                          const char* what) {
  MilpSolution solution = SolveMilp(model, options);
  if (solution.status == SolveStatus::kInfeasible) {
    throw InfeasibleProblem(std::string(what) + " is infeasible");
  }
  if (solution.status == SolveStatus::kUnbounded) {
    throw InfeasibleProblem(std::string(what) + " is unbounded");
  }
  return solution;
}

void AddObjectiveCap(MilpModel& model, const TransportLayout& layout,
                     const LinearObjective& objective, const char* name,
                     double cap) {
  model.AddConstraint({name, ObjectiveTerms(layout, objective),
                       Relation::kLessEqual, cap - objective.constant});
}

LinearObjective Combine(const LinearObjective& a, double wa,
                        const LinearObjective& b, double wb) {
  LinearObjective out = a;
  for (std::size_t i = 0; i < out.flow.rows(); ++i) {
    for (std::size_t j = 0; j < out.flow.cols(); ++j) {
      out.flow(i, j) = wa * a.flow(i, j) + wb * b.flow(i, j);
      out.activation(i, j) = wa * a.activation(i, j) + wb * b.activation(i, j);
    }
  }
  out.constant = wa * a.constant + wb * b.constant;
  return out;
}

void Accumulate(SolveStats& total, const SolveStats& part) {
  total.nodes += part.nodes;
  total.lp_solves += part.lp_solves;
  total.pivots += part.pivots;
}

}  // namespace

PayoffTable PayoffOverride::ToTable() const {
  PayoffTable table;
  table.lower = {lower_best, lower_worst};
  table.width = {width_best, width_worst};
  return table;
}

double Membership(double z, const ObjectiveRange& range) {
  if (range.degenerate()) return 1.0;
  if (z <= range.best) return 1.0;
  if (z >= range.worst) return 0.0;
  return (range.worst - z) / range.span();
}

PayoffTable BuildPayoff(const BiObjectiveMilp& bi, const MilpOptions& options) {
  const TransportLayout layout(bi.sources, bi.destinations);
  const MilpSolution lower_solo =
      SolveOrThrow(BuildTransportModel(bi, bi.lower), options,
                   "left-limit objective model");
  const MilpSolution width_solo =
      SolveOrThrow(BuildTransportModel(bi, bi.width), options,
                   "width objective model");

  PayoffTable table;
  table.anchor_plans.push_back(ExtractPlan(layout, lower_solo.values));
  table.anchor_plans.push_back(ExtractPlan(layout, width_solo.values));
  const ShipmentPlan& a = table.anchor_plans[0];
  const ShipmentPlan& b = table.anchor_plans[1];
  table.lower.best = bi.lower.Evaluate(a);
  table.lower.worst = std::max(table.lower.best, bi.lower.Evaluate(b));
  table.width.best = bi.width.Evaluate(b);
  table.width.worst = std::max(table.width.best, bi.width.Evaluate(a));
  return table;
}

ProblemIv BuildProblemIv(const BiObjectiveMilp& bi, const PayoffTable& payoff) {
  if (payoff.lower.worst < payoff.lower.best ||
      payoff.width.worst < payoff.width.best) {
    throw std::invalid_argument("payoff table needs U_k >= L_k");
  }
  const TransportLayout layout(bi.sources, bi.destinations);
  LinearObjective none{Matrix<double>(bi.sources, bi.destinations, 0.0),
                       Matrix<double>(bi.sources, bi.destinations, 0.0), 0.0};
  ProblemIv iv{BuildTransportModel(bi, none), 0};
  iv.model.set_sense(Sense::kMaximize);
  iv.lambda = iv.model.AddContinuous("lambda", 0.0, 1.0, 1.0);

  auto add_membership_row = [&](const LinearObjective& objective,
                                const ObjectiveRange& range, const char* name) {
    Constraint row{name, ObjectiveTerms(layout, objective),
                   Relation::kLessEqual, range.worst - objective.constant};
    if (!range.degenerate()) row.terms.push_back({iv.lambda, range.span()});
    iv.model.AddConstraint(std::move(row));
  };
  add_membership_row(bi.lower, payoff.lower, "membership(lower)");
  add_membership_row(bi.width, payoff.width, "membership(width)");
  return iv;
}

CompromiseResult SolveCompromise(const IfctpInstance& instance,
                                 const CompromiseOptions& options) {
  const BiObjectiveMilp bi = BuildBiObjective(instance);
  const TransportLayout layout(bi.sources, bi.destinations);

  CompromiseResult result;
  result.payoff = options.payoff_override ? options.payoff_override->ToTable()
                                          : BuildPayoff(bi, options.milp);

  const ProblemIv iv = BuildProblemIv(bi, result.payoff);
  const MilpSolution stage1 =
      SolveOrThrow(iv.model, options.milp, "max-min compromise model");
  Accumulate(result.stats, stage1.stats);
  result.lambda_star = std::clamp(stage1.values[iv.lambda], 0.0, 1.0);
  result.plan = ExtractPlan(layout, stage1.values);
  result.lower_value = bi.lower.Evaluate(result.plan);
  result.width_value = bi.width.Evaluate(result.plan);

  // Second stage: stay at or below both first-stage values and minimize the
  // range-normalized sum, which removes weakly efficient outcomes.
  const double lower_weight = result.payoff.lower.degenerate()
                                  ? 1.0
                                  : 1.0 / result.payoff.lower.span();
  const double width_weight = result.payoff.width.degenerate()
                                  ? 1.0
                                  : 1.0 / result.payoff.width.span();
  MilpModel refine = BuildTransportModel(
      bi, Combine(bi.lower, lower_weight, bi.width, width_weight));
  AddObjectiveCap(refine, layout, bi.lower, "cap(lower)",
                  result.lower_value + CapSlack(result.lower_value));
  AddObjectiveCap(refine, layout, bi.width, "cap(width)",
                  result.width_value + CapSlack(result.width_value));
  const MilpSolution stage2 = SolveMilp(refine, options.milp);
  Accumulate(result.stats, stage2.stats);
  if (stage2.optimal()) {
    ShipmentPlan refined = ExtractPlan(layout, stage2.values);
    const double lower = bi.lower.Evaluate(refined);
    const double width = bi.width.Evaluate(refined);
    if (lower <= result.lower_value + CapSlack(result.lower_value) &&
        width <= result.width_value + CapSlack(result.width_value)) {
      result.plan = std::move(refined);
      result.lower_value = lower;
      result.width_value = width;
    }
  }
  result.lower_membership = Membership(result.lower_value, result.payoff.lower);
  result.width_membership = Membership(result.width_value, result.payoff.width);
  return result;
}

IdealPoint ComputeIdeal(const IfctpInstance& instance,
                        const MilpOptions& options) {
  const MilpSolution center = SolveOrThrow(
      BuildSingleObjective(instance, ObjectiveKind::kCenter), options,
      "center objective model");
  const MilpSolution width = SolveOrThrow(
      BuildSingleObjective(instance, ObjectiveKind::kWidth), options,
      "width objective model");
  return {center.objective_value, std::max(0.0, width.objective_value)};
}

DominanceCheck CheckDominance(const BiObjectiveMilp& bi, double lower_value,
                              double width_value, DominanceSolver solver) {
  const TransportLayout layout(bi.sources, bi.destinations);
  auto solve = [solver](const MilpModel& model) {
    return solver == DominanceSolver::kOracle ? OracleSolve(model)
                                              : SolveMilp(model);
  };
  DominanceCheck check;

  MilpModel lower_model = BuildTransportModel(bi, bi.lower);
  AddObjectiveCap(lower_model, layout, bi.width, "cap(width)",
                  width_value + CapSlack(width_value));
  const MilpSolution lower = solve(lower_model);
  if (lower.optimal()) {
    check.lower_improvement = lower_value - lower.objective_value;
  }

  MilpModel width_model = BuildTransportModel(bi, bi.width);
  AddObjectiveCap(width_model, layout, bi.lower, "cap(lower)",
                  lower_value + CapSlack(lower_value));
  const MilpSolution width = solve(width_model);
  if (width.optimal()) {
    check.width_improvement = width_value - width.objective_value;
  }
  return check;
}

}  // namespace ifctp
