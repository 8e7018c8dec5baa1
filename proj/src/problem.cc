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

#include "ifctp/problem.h"

#include <cmath>
#include <sstream>

namespace ifctp {
namespace {

std::string Num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string Label(const std::string& name, std::size_t i) {
  return name + "(" + std::to_string(i + 1) + ")";
}

}  // namespace

std::string CellLabel(const std::string& name, std::size_t i, std::size_t j) {
  return name + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
         ")";
}

IfctpInstance ToIntervalInstance(const FctpInstance& crisp) {
  IfctpInstance out;
  out.sources = crisp.sources;
  out.destinations = crisp.destinations;
  out.unit_cost = Matrix<Interval>(crisp.unit_cost.rows(),
                                   crisp.unit_cost.cols());
  out.fixed_charge = Matrix<Interval>(crisp.fixed_charge.rows(),
                                      crisp.fixed_charge.cols());
  for (std::size_t i = 0; i < crisp.unit_cost.rows(); ++i) {
    for (std::size_t j = 0; j < crisp.unit_cost.cols(); ++j) {
      out.unit_cost(i, j) = Interval::Point(crisp.unit_cost(i, j));
    }
  }
  for (std::size_t i = 0; i < crisp.fixed_charge.rows(); ++i) {
    for (std::size_t j = 0; j < crisp.fixed_charge.cols(); ++j) {
      out.fixed_charge(i, j) = Interval::Point(crisp.fixed_charge(i, j));
    }
  }
  for (double s : crisp.supply) out.supply.push_back(Interval::Point(s));
  for (double d : crisp.demand) out.demand.push_back(Interval::Point(d));
  return out;
}

IfctpInstance ZeroWidthCopy(const IfctpInstance& instance) {
  auto collapse = [](const Interval& a) { return Interval::Point(a.center()); };
  IfctpInstance out = instance;
  for (std::size_t i = 0; i < out.unit_cost.rows(); ++i) {
    for (std::size_t j = 0; j < out.unit_cost.cols(); ++j) {
      out.unit_cost(i, j) = collapse(out.unit_cost(i, j));
      out.fixed_charge(i, j) = collapse(out.fixed_charge(i, j));
    }
  }
  for (auto& s : out.supply) s = Interval::Point(s.hi());
  for (auto& d : out.demand) d = Interval::Point(d.lo());
  return out;
}

void ShipmentPlan::DeriveActivations(double tolerance) {
  for (std::size_t i = 0; i < quantity.rows(); ++i) {
    for (std::size_t j = 0; j < quantity.cols(); ++j) {
      active(i, j) = quantity(i, j) > tolerance ? 1 : 0;
    }
  }
}

std::vector<Violation> Validate(const IfctpInstance& instance) {
  std::vector<Violation> out;
  const std::size_t m = instance.sources;
  const std::size_t n = instance.destinations;
  if (m < 1) out.push_back({"dims", "at least one source required"});
  if (n < 1) out.push_back({"dims", "at least one destination required"});

  auto check_matrix = [&](const Matrix<Interval>& mat, const std::string& name,
                          bool nonnegative_lo) {
    if (mat.rows() != m || mat.cols() != n) {
      out.push_back({name, "expected " + std::to_string(m) + "x" +
                               std::to_string(n) + " entries, found " +
                               std::to_string(mat.rows()) + "x" +
                               std::to_string(mat.cols())});
      return;
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Interval& v = mat(i, j);
        if (!std::isfinite(v.lo()) || !std::isfinite(v.hi())) {
          out.push_back({CellLabel(name, i, j), "interval limit not finite"});
        } else if (nonnegative_lo && v.lo() < 0.0) {
          out.push_back({CellLabel(name, i, j),
                         "negative fixed charge lower limit " + Num(v.lo())});
        }
      }
    }
  };
  check_matrix(instance.unit_cost, "t", false);
  check_matrix(instance.fixed_charge, "l", true);

  auto check_vector = [&](const std::vector<Interval>& vec,
                          const std::string& name, std::size_t expected) {
    if (vec.size() != expected) {
      out.push_back({name, "expected " + std::to_string(expected) +
                               " entries, found " +
                               std::to_string(vec.size())});
      return false;
    }
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if (!std::isfinite(vec[i].lo()) || !std::isfinite(vec[i].hi())) {
        out.push_back({Label(name, i), "interval limit not finite"});
      } else if (vec[i].lo() < 0.0) {
        out.push_back({Label(name, i), "negative lower limit " +
                                           Num(vec[i].lo())});
      }
    }
    return true;
  };
  const bool supply_ok = check_vector(instance.supply, "supply", m);
  const bool demand_ok = check_vector(instance.demand, "demand", n);

  if (supply_ok && demand_ok) {
    double total_supply = 0.0;
    double total_demand = 0.0;
    for (const auto& s : instance.supply) total_supply += s.hi();
    for (const auto& d : instance.demand) total_demand += d.lo();
    if (total_supply < total_demand) {
      out.push_back({"aggregate", "aggregate supply < aggregate demand (" +
                                      Num(total_supply) + " < " +
                                      Num(total_demand) + ")"});
    }
  }
  return out;
}

std::vector<Violation> CheckPlan(const IfctpInstance& instance,
                                 const ShipmentPlan& plan, double tolerance) {
  const std::size_t m = instance.sources;
  const std::size_t n = instance.destinations;
  if (plan.quantity.rows() != m || plan.quantity.cols() != n ||
      plan.active.rows() != m || plan.active.cols() != n ||
      instance.supply.size() != m || instance.demand.size() != n) {
    throw DimensionMismatch("plan dimensions do not match the instance");
  }
  std::vector<Violation> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double y = plan.quantity(i, j);
      const int x = plan.active(i, j);
      if (y < -tolerance) {
        out.push_back({CellLabel("y", i, j), "negative quantity " + Num(y)});
      }
      if (x != 0 && x != 1) {
        out.push_back({CellLabel("x", i, j), "activation not binary"});
      } else if (y > tolerance && x == 0) {
        out.push_back({CellLabel("x", i, j), "route carries flow but x = 0"});
      } else if (y <= tolerance && x == 1) {
        out.push_back({CellLabel("x", i, j), "route idle but x = 1"});
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += plan.quantity(i, j);
    const double cap = instance.supply[i].hi();
    if (row > cap + tolerance) {
      out.push_back({"row " + std::to_string(i + 1),
                     "row " + std::to_string(i + 1) + " exceeds supply cap " +
                         Num(cap) + " (shipped " + Num(row) + ")"});
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < m; ++i) col += plan.quantity(i, j);
    const double floor = instance.demand[j].lo();
    if (col < floor - tolerance) {
      out.push_back({"column " + std::to_string(j + 1),
                     "column " + std::to_string(j + 1) +
                         " below demand floor " + Num(floor) + " (received " +
                         Num(col) + ")"});
    }
  }
  return out;
}

}  // namespace ifctp
