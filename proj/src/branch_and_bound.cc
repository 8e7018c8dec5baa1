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

#include <cmath>
#include <queue>
#include <vector>

#include "ifctp/milp_model.h"

namespace ifctp {
namespace {

struct Node {
  std::vector<VariableBounds> bounds;
  double parent_bound = -kInfinity;  // in minimization sense
  int depth = 0;
  std::int64_t sequence = 0;
};

// Best bound first; ties go to the deeper node, then to the earlier one.
struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.parent_bound != b.parent_bound) return a.parent_bound > b.parent_bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.sequence > b.sequence;
  }
};

// Most fractional binary, lowest index on ties; -1 when integral.
int BranchingVariable(const std::vector<int>& binaries,
                      const std::vector<double>& values, double tolerance) {
  int best = -1;
  double best_frac = tolerance;
  for (int k : binaries) {
    const double v = values[k];
    const double frac = std::min(v - std::floor(v), std::ceil(v) - v);
    if (frac > best_frac) {
      best = k;
      best_frac = frac;
    }
  }
  return best;
}

}  // namespace

MilpSolution SolveMilp(const MilpModel& model, const MilpOptions& options) {
  model.Validate();
  const double sign = model.sense() == Sense::kMaximize ? -1.0 : 1.0;
  const std::vector<int> binaries = model.binary_indices();

  MilpSolution best;
  best.status = SolveStatus::kInfeasible;
  double incumbent = kInfinity;  // minimization sense
  SolveStats stats;

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  std::int64_t sequence = 0;
  open.push(Node{model.bounds(), -kInfinity, 0, sequence++});

  auto prune_level = [&] {
    if (incumbent == kInfinity) return kInfinity;
    return incumbent - options.improvement_tolerance *
                           std::max(1.0, std::fabs(incumbent));
  };

  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    if (node.parent_bound >= prune_level()) continue;
    if (++stats.nodes > options.node_limit) {
      throw ResourceLimitExceeded("branch-and-bound node limit of " +
                                  std::to_string(options.node_limit) +
                                  " exceeded");
    }
    const MilpSolution lp = SolveLp(model, node.bounds, options.lp);
    ++stats.lp_solves;
    stats.pivots += lp.stats.pivots;
    if (lp.status == SolveStatus::kInfeasible) continue;
    if (lp.status == SolveStatus::kUnbounded) {
      best.status = SolveStatus::kUnbounded;
      best.values.clear();
      best.stats = stats;
      return best;
    }
    const double bound = sign * lp.objective_value;
    if (bound >= prune_level()) continue;

    const int branch = BranchingVariable(binaries, lp.values,
                                         options.integrality_tolerance);
    if (branch < 0) {
      if (bound < incumbent - options.improvement_tolerance) {
        incumbent = bound;
        best.status = SolveStatus::kOptimal;
        best.values = lp.values;
      }
      continue;
    }

    const double v = lp.values[branch];
    Node down{node.bounds, bound, node.depth + 1, 0};
    down.bounds[branch] = {0.0, 0.0};
    Node up{std::move(node.bounds), bound, node.depth + 1, 0};
    up.bounds[branch] = {1.0, 1.0};
    if (v >= 0.5) {
      up.sequence = sequence++;
      down.sequence = sequence++;
    } else {
      down.sequence = sequence++;
      up.sequence = sequence++;
    }
    open.push(std::move(up));
    open.push(std::move(down));
  }

  best.stats = stats;
  if (best.status == SolveStatus::kOptimal) {
    for (int k : binaries) best.values[k] = std::round(best.values[k]);
    best.objective_value = model.Evaluate(best.values);
  }
  return best;
}

}  // namespace ifctp
