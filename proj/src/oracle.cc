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
#include <cstdint>
#include <vector>

#include "ifctp/milp_model.h"

namespace ifctp {

MilpSolution OracleSolve(const MilpModel& model, int max_binaries,
                         const LpOptions& options) {
  model.Validate();
  const std::vector<int> binaries = model.binary_indices();
  const int k = static_cast<int>(binaries.size());
  if (k > max_binaries) {
    throw OracleOutOfScope("oracle enumerates at most " +
                           std::to_string(max_binaries) + " binaries, model has " +
                           std::to_string(k));
  }
  const double sign = model.sense() == Sense::kMaximize ? -1.0 : 1.0;

  MilpSolution best;
  best.status = SolveStatus::kInfeasible;
  double incumbent = kInfinity;
  std::vector<VariableBounds> bounds = model.bounds();
  const std::uint64_t patterns = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    bool admissible = true;
    for (int b = 0; b < k; ++b) {
      const double value = (mask >> b) & 1u ? 1.0 : 0.0;
      const Variable& var = model.variables()[binaries[b]];
      if (value < var.lower || value > var.upper) admissible = false;
      bounds[binaries[b]] = {value, value};
    }
    if (!admissible) continue;
    const MilpSolution lp = SolveLp(model, bounds, options);
    ++best.stats.lp_solves;
    best.stats.pivots += lp.stats.pivots;
    if (lp.status == SolveStatus::kUnbounded) {
      best.status = SolveStatus::kUnbounded;
      best.values.clear();
      return best;
    }
    if (lp.status != SolveStatus::kOptimal) continue;
    const double value = sign * lp.objective_value;
    if (incumbent == kInfinity ||
        value < incumbent - 1e-9 * std::max(1.0, std::fabs(incumbent))) {
      incumbent = value;
      best.status = SolveStatus::kOptimal;
      best.values = lp.values;
      best.objective_value = lp.objective_value;
    }
  }
  best.stats.nodes = static_cast<std::int64_t>(patterns);
  return best;
}

}  // namespace ifctp
