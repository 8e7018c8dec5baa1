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

#include "ifctp/crispify.h"

#include <string>

namespace ifctp {

double LinearObjective::Evaluate(const ShipmentPlan& plan) const {
  if (plan.quantity.rows() != flow.rows() ||
      plan.quantity.cols() != flow.cols()) {
    throw DimensionMismatch("plan dimensions do not match the objective");
  }
  double total = constant;
  for (std::size_t i = 0; i < flow.rows(); ++i) {
    for (std::size_t j = 0; j < flow.cols(); ++j) {
      total += flow(i, j) * plan.quantity(i, j) +
               activation(i, j) * plan.active(i, j);
    }
  }
  return total;
}

LinearObjective MakeObjective(const IfctpInstance& instance,
                              ObjectiveKind kind) {
  auto pick = [kind](const Interval& a) {
    switch (kind) {
      case ObjectiveKind::kLower:
        return a.lo();
      case ObjectiveKind::kCenter:
        return a.center();
      case ObjectiveKind::kWidth:
        return a.width();
    }
    return 0.0;
  };
  const std::size_t m = instance.sources;
  const std::size_t n = instance.destinations;
  LinearObjective out{Matrix<double>(m, n), Matrix<double>(m, n), 0.0};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.flow(i, j) = pick(instance.unit_cost(i, j));
      out.activation(i, j) = pick(instance.fixed_charge(i, j));
    }
  }
  return out;
}

BiObjectiveMilp BuildBiObjective(const IfctpInstance& instance) {
  const std::vector<Violation> violations = Validate(instance);
  if (!violations.empty()) {
    throw BuildError("invalid instance: " + violations.front().ToString());
  }
  const std::size_t m = instance.sources;
  const std::size_t n = instance.destinations;
  BiObjectiveMilp bi;
  bi.sources = m;
  bi.destinations = n;
  bi.lower = MakeObjective(instance, ObjectiveKind::kLower);
  bi.width = MakeObjective(instance, ObjectiveKind::kWidth);
  bi.big_m = Matrix<double>(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    bi.supply_caps.push_back(instance.supply[i].hi());
    for (std::size_t j = 0; j < n; ++j) bi.big_m(i, j) = instance.supply[i].hi();
  }
  for (std::size_t j = 0; j < n; ++j) {
    bi.demand_floors.push_back(instance.demand[j].lo());
  }
  return bi;
}

std::vector<LinearTerm> ObjectiveTerms(const TransportLayout& layout,
                                       const LinearObjective& objective) {
  std::vector<LinearTerm> terms;
  for (std::size_t i = 0; i < layout.sources(); ++i) {
    for (std::size_t j = 0; j < layout.destinations(); ++j) {
      if (objective.flow(i, j) != 0.0) {
        terms.push_back({layout.flow(i, j), objective.flow(i, j)});
      }
      if (objective.activation(i, j) != 0.0) {
        terms.push_back({layout.active(i, j), objective.activation(i, j)});
      }
    }
  }
  return terms;
}

MilpModel BuildTransportModel(const BiObjectiveMilp& bi,
                              const LinearObjective& objective) {
  const std::size_t m = bi.sources;
  const std::size_t n = bi.destinations;
  const TransportLayout layout(m, n);
  MilpModel model(Sense::kMinimize);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      model.AddContinuous(CellLabel("y", i, j), 0.0, kInfinity,
                          objective.flow(i, j));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      model.AddBinary(CellLabel("x", i, j), objective.activation(i, j));
    }
  }
  model.set_objective_constant(objective.constant);

  for (std::size_t i = 0; i < m; ++i) {
    Constraint row{"supply(" + std::to_string(i + 1) + ")", {},
                   Relation::kLessEqual, bi.supply_caps[i]};
    for (std::size_t j = 0; j < n; ++j) row.terms.push_back({layout.flow(i, j), 1.0});
    model.AddConstraint(std::move(row));
  }
  for (std::size_t j = 0; j < n; ++j) {
    Constraint row{"demand(" + std::to_string(j + 1) + ")", {},
                   Relation::kGreaterEqual, bi.demand_floors[j]};
    for (std::size_t i = 0; i < m; ++i) row.terms.push_back({layout.flow(i, j), 1.0});
    model.AddConstraint(std::move(row));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      model.AddConstraint({CellLabel("link", i, j),
                           {{layout.flow(i, j), 1.0},
                            {layout.active(i, j), -bi.big_m(i, j)}},
                           Relation::kLessEqual,
                           0.0});
    }
  }
  return model;
}

MilpModel BuildSingleObjective(const IfctpInstance& instance,
                               ObjectiveKind kind) {
  const BiObjectiveMilp bi = BuildBiObjective(instance);
  return BuildTransportModel(bi, MakeObjective(instance, kind));
}

MilpModel BuildCrispModel(const FctpInstance& instance) {
  const std::size_t m = instance.sources;
  const std::size_t n = instance.destinations;
  if (m < 1 || n < 1 || instance.unit_cost.rows() != m ||
      instance.unit_cost.cols() != n || instance.fixed_charge.rows() != m ||
      instance.fixed_charge.cols() != n || instance.supply.size() != m ||
      instance.demand.size() != n) {
    throw BuildError("crisp instance has inconsistent dimensions");
  }
  BiObjectiveMilp shape;
  shape.sources = m;
  shape.destinations = n;
  shape.supply_caps = instance.supply;
  shape.demand_floors = instance.demand;
  shape.big_m = Matrix<double>(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (instance.fixed_charge(i, j) < 0.0) {
        throw BuildError("negative fixed charge at " + CellLabel("l", i, j));
      }
      shape.big_m(i, j) = instance.supply[i];
    }
  }
  return BuildTransportModel(
      shape, LinearObjective{instance.unit_cost, instance.fixed_charge, 0.0});
}

ShipmentPlan ExtractPlan(const TransportLayout& layout,
                         const std::vector<double>& values,
                         double tolerance) {
  ShipmentPlan plan(layout.sources(), layout.destinations());
  for (std::size_t i = 0; i < layout.sources(); ++i) {
    for (std::size_t j = 0; j < layout.destinations(); ++j) {
      const double y = values.at(layout.flow(i, j));
      plan.quantity(i, j) = y > 1e-9 ? y : 0.0;
    }
  }
  plan.DeriveActivations(tolerance);
  return plan;
}

Interval EvaluateIntervalObjective(const IfctpInstance& instance,
                                   const ShipmentPlan& plan) {
  const std::size_t m = instance.sources;
  const std::size_t n = instance.destinations;
  if (plan.quantity.rows() != m || plan.quantity.cols() != n ||
      plan.active.rows() != m || plan.active.cols() != n) {
    throw DimensionMismatch("plan dimensions do not match the instance");
  }
  Interval total = Interval::Point(0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      total = total + Scale(plan.quantity(i, j), instance.unit_cost(i, j)) +
              Scale(plan.active(i, j), instance.fixed_charge(i, j));
    }
  }
  return total;
}

}  // namespace ifctp
