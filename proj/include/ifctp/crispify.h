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

// Turns an interval instance into the crisp bi-objective model: minimize the
// left limit of the interval cost and its width, over supply caps at the
// upper supply limits and demand floors at the lower demand limits. The
// route activation rule x = [y > 0] is linearized as y <= M x with M set to
// the source's supply cap, which the row constraint already implies.

#ifndef IFCTP_CRISPIFY_H_
#define IFCTP_CRISPIFY_H_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ifctp/interval.h"
#include "ifctp/milp_model.h"
#include "ifctp/problem.h"

namespace ifctp {

struct LinearObjective {
  Matrix<double> flow;        // coefficient of y_ij
  Matrix<double> activation;  // coefficient of x_ij
  double constant = 0.0;

  double Evaluate(const ShipmentPlan& plan) const;
};

struct BiObjectiveMilp {
  std::size_t sources = 0;
  std::size_t destinations = 0;
  LinearObjective lower;  // left limit of the interval cost
  LinearObjective width;  // half-width of the interval cost
  std::vector<double> supply_caps;
  std::vector<double> demand_floors;
  Matrix<double> big_m;
};

class BuildError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ObjectiveKind { kLower, kCenter, kWidth };

// Objective coefficients taken from the interval data: lower limits, centers
// or widths of unit costs and fixed charges.
LinearObjective MakeObjective(const IfctpInstance& instance,
                              ObjectiveKind kind);

// Throws BuildError naming the first violation if `instance` is invalid.
BiObjectiveMilp BuildBiObjective(const IfctpInstance& instance);

// Column layout shared by every transport model: y block, then x block, then
// any extra variables the caller appends.
class TransportLayout {
 public:
  TransportLayout(std::size_t sources, std::size_t destinations)
      : sources_(sources), destinations_(destinations) {}

  int flow(std::size_t i, std::size_t j) const {
    return static_cast<int>(i * destinations_ + j);
  }
  int active(std::size_t i, std::size_t j) const {
    return static_cast<int>(sources_ * destinations_ + i * destinations_ + j);
  }
  int size() const { return static_cast<int>(2 * sources_ * destinations_); }
  std::size_t sources() const { return sources_; }
  std::size_t destinations() const { return destinations_; }

 private:
  std::size_t sources_;
  std::size_t destinations_;
};

// y/x variables, supply, demand and linking rows, with `objective`
// minimized.
MilpModel BuildTransportModel(const BiObjectiveMilp& bi,
                              const LinearObjective& objective);

// Minimize the center (expected cost) or the width (uncertainty) objective
// over the same constraint set. kLower is accepted as well.
MilpModel BuildSingleObjective(const IfctpInstance& instance,
                               ObjectiveKind kind);

// Crisp problem built straight from crisp data.
MilpModel BuildCrispModel(const FctpInstance& instance);

// Terms of `objective` over the layout's y and x columns.
std::vector<LinearTerm> ObjectiveTerms(const TransportLayout& layout,
                                       const LinearObjective& objective);

// Reads y from a solver assignment; x is re-derived as y > tolerance and
// quantities at or below 1e-9 are snapped to zero.
ShipmentPlan ExtractPlan(const TransportLayout& layout,
                         const std::vector<double>& values,
                         double tolerance = 1e-6);

// Interval cost [sum(t.lo y + l.lo x), sum(t.hi y + l.hi x)] of a plan.
Interval EvaluateIntervalObjective(const IfctpInstance& instance,
                                   const ShipmentPlan& plan);

}  // namespace ifctp

#endif  // IFCTP_CRISPIFY_H_
