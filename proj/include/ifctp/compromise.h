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

// Max-min fuzzy compromise between the left-limit and width objectives, and
// the ideal (center, width) point.
//
// Each objective k gets a linear membership mu_k = (U_k - z_k) / (U_k - L_k)
// clipped to [0,1], where L_k is its solo optimum and U_k its worst value
// over the solo-optimal (anchor) plans. The compromise maximizes lambda with
// z_k + lambda (U_k - L_k) <= U_k for both objectives, then a second stage
// keeps both objective values capped at the first-stage plan and minimizes
// their range-normalized sum so the returned plan is Pareto-optimal.

#ifndef IFCTP_COMPROMISE_H_
#define IFCTP_COMPROMISE_H_

#include <optional>
#include <stdexcept>
#include <vector>

#include "ifctp/crispify.h"
#include "ifctp/interval.h"
#include "ifctp/milp_model.h"
#include "ifctp/problem.h"

namespace ifctp {

// Best (L) and worst acceptable (U) value of one objective.
struct ObjectiveRange {
  double best = 0.0;
  double worst = 0.0;

  double span() const { return worst - best; }
  bool degenerate() const { return !(worst > best); }
};

struct PayoffTable {
  ObjectiveRange lower;  // z_lower
  ObjectiveRange width;  // z_w
  // Solo-optimal plans for z_lower and z_w; empty when the table was
  // supplied by the caller.
  std::vector<ShipmentPlan> anchor_plans;
};

// Caller-supplied payoff values, in the order L1, U1, L2, U2.
struct PayoffOverride {
  double lower_best = 0.0;
  double lower_worst = 0.0;
  double width_best = 0.0;
  double width_worst = 0.0;

  PayoffTable ToTable() const;
};

class InfeasibleProblem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Membership of value z: 1 at or below best, 0 at or above worst, linear in
// between. A degenerate range has membership 1.
double Membership(double z, const ObjectiveRange& range);

PayoffTable BuildPayoff(const BiObjectiveMilp& bi,
                        const MilpOptions& options = {});

struct ProblemIv {
  MilpModel model;
  int lambda = 0;  // column of lambda
};

// maximize lambda subject to the transport constraints and one membership
// row per objective. A degenerate objective contributes z_k <= U_k instead.
ProblemIv BuildProblemIv(const BiObjectiveMilp& bi, const PayoffTable& payoff);

struct CompromiseResult {
  double lambda_star = 0.0;
  ShipmentPlan plan;
  double lower_value = 0.0;
  double width_value = 0.0;
  double lower_membership = 0.0;
  double width_membership = 0.0;
  PayoffTable payoff;
  SolveStats stats;
};

struct CompromiseOptions {
  std::optional<PayoffOverride> payoff_override;
  MilpOptions milp;
};

// Throws InfeasibleProblem when the transport constraints (or the overridden
// membership rows) admit no plan.
CompromiseResult SolveCompromise(const IfctpInstance& instance,
                                 const CompromiseOptions& options = {});

struct IdealPoint {
  double center = 0.0;
  double width = 0.0;

  CenterWidth ToCenterWidth() const { return {center, width}; }
};

// Componentwise minima of the center and width objectives.
IdealPoint ComputeIdeal(const IfctpInstance& instance,
                        const MilpOptions& options = {});

// Outcome of searching for a plan that Pareto-dominates (lower, width).
struct DominanceCheck {
  double lower_improvement = 0.0;  // best z_lower drop at no worse z_w
  double width_improvement = 0.0;  // best z_w drop at no worse z_lower
  bool dominated(double tolerance) const {
    return lower_improvement > tolerance || width_improvement > tolerance;
  }
};

enum class DominanceSolver { kBranchAndBound, kOracle };

DominanceCheck CheckDominance(const BiObjectiveMilp& bi, double lower_value,
                              double width_value, DominanceSolver solver);

}  // namespace ifctp

#endif  // IFCTP_COMPROMISE_H_
