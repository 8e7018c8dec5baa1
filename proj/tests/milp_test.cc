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

#include "ifctp/milp_model.h"

#include <cmath>
#include <functional>
#include <optional>
#include <random>

#include "gtest/gtest.h"
#include "ifctp/compromise.h"
#include "ifctp/crispify.h"
#include "test_support.h"

namespace ifctp {
namespace {

using ::ifctp::testing::RandomInstance;
using ::ifctp::testing::Example3x4;

// Brute-force LP oracle: every vertex of a bounded polytope is the solution
// of n linearly independent active constraints.
std::optional<double> VertexEnumerationMinimum(const MilpModel& model) {
  const int n = model.num_variables();
  struct Plane {
    std::vector<double> a;
    double b;
  };
  std::vector<Plane> planes;
  for (const Constraint& c : model.constraints()) {
    Plane p{std::vector<double>(n, 0.0), c.rhs};
    for (const LinearTerm& t : c.terms) p.a[t.variable] += t.coefficient;
    planes.push_back(p);
  }
  for (int k = 0; k < n; ++k) {
    Plane lo{std::vector<double>(n, 0.0), model.variables()[k].lower};
    lo.a[k] = 1.0;
    planes.push_back(lo);
    Plane hi{std::vector<double>(n, 0.0), model.variables()[k].upper};
    hi.a[k] = 1.0;
    planes.push_back(hi);
  }
  const int p = static_cast<int>(planes.size());
  std::optional<double> best;
  std::vector<int> pick(n);
  // Iterate over all n-subsets of the planes.
  std::function<void(int, int)> recurse = [&](int start, int depth) {
    if (depth == n) {
      std::vector<std::vector<double>> m(n, std::vector<double>(n + 1));
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m[r][c] = planes[pick[r]].a[c];
        m[r][n] = planes[pick[r]].b;
      }
      for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r) {
          if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
        }
        if (std::fabs(m[piv][c]) < 1e-10) return;
        std::swap(m[c], m[piv]);
        for (int r = 0; r < n; ++r) {
          if (r == c) continue;
          const double f = m[r][c] / m[c][c];
          for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
        }
      }
      std::vector<double> x(n);
      for (int r = 0; r < n; ++r) x[r] = m[r][n] / m[r][r];
      if (model.MaxViolation(x) > 1e-7) return;
      const double v = model.Evaluate(x);
      if (!best || v < *best) best = v;
      return;
    }
    for (int k = start; k < p; ++k) {
      pick[depth] = k;
      recurse(k + 1, depth + 1);
    }
  };
  recurse(0, 0);
  return best;
}

MilpModel OneVariable(Relation rel, double rhs) {
  MilpModel model;
  const int y = model.AddContinuous("y", 0.0, kInfinity, 1.0);
  model.AddConstraint({"r", {{y, 1.0}}, rel, rhs});
  return model;
}

TEST(SolveLpTest, SingleVariable) {
  const MilpSolution s = SolveLp(OneVariable(Relation::kGreaterEqual, 3.0));
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_DOUBLE_EQ(s.objective_value, 3.0);
}

TEST(SolveLpTest, EmptyRegionIsInfeasible) {
  MilpModel model = OneVariable(Relation::kLessEqual, 1.0);
  model.AddConstraint({"r2", {{0, 1.0}}, Relation::kGreaterEqual, 2.0});
  EXPECT_EQ(SolveLp(model).status, SolveStatus::kInfeasible);
}

TEST(SolveLpTest, Unbounded) {
  MilpModel model = OneVariable(Relation::kGreaterEqual, 0.0);
  model.set_objective(0, -1.0);
  EXPECT_EQ(SolveLp(model).status, SolveStatus::kUnbounded);
}

TEST(SolveLpTest, MaximizeWithEqualityAndRedundantRows) {
  MilpModel model(Sense::kMaximize);
  const int a = model.AddContinuous("a", 0, kInfinity, 1.0);
  const int b = model.AddContinuous("b", 0, 3, 2.0);
  model.AddConstraint({"e1", {{a, 1}, {b, 1}}, Relation::kEqual, 5});
  model.AddConstraint({"e2", {{a, 2}, {b, 2}}, Relation::kEqual, 10});
  const MilpSolution s = SolveLp(model);
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, 8.0, 1e-9);
  EXPECT_NEAR(s.values[b], 3.0, 1e-9);
}

TEST(SolveLpTest, FixedVariablesAreSubstituted) {
  MilpModel model;
  const int a = model.AddContinuous("a", 2, 2, 1.0);
  const int b = model.AddContinuous("b", 0, kInfinity, 1.0);
  model.AddConstraint({"r", {{a, 1}, {b, 1}}, Relation::kGreaterEqual, 5});
  model.AddConstraint({"only_a", {{a, 1}}, Relation::kLessEqual, 1});
  EXPECT_EQ(SolveLp(model).status, SolveStatus::kInfeasible);
  model.set_bounds(a, 1, 1);
  const MilpSolution s = SolveLp(model);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.objective_value, 5.0, 1e-9);
}

// Beale's example cycles under a naive Dantzig rule.
MilpModel Beale() {
  MilpModel model;
  const int x4 = model.AddContinuous("x4", 0, kInfinity, -0.75);
  const int x5 = model.AddContinuous("x5", 0, kInfinity, 20);
  const int x6 = model.AddContinuous("x6", 0, kInfinity, -0.5);
  const int x7 = model.AddContinuous("x7", 0, kInfinity, 6);
  model.AddConstraint({"r1", {{x4, 0.25}, {x5, -8}, {x6, -1}, {x7, 9}},
                       Relation::kLessEqual, 0});
  model.AddConstraint({"r2", {{x4, 0.5}, {x5, -12}, {x6, -0.5}, {x7, 3}},
                       Relation::kLessEqual, 0});
  model.AddConstraint({"r3", {{x6, 1}}, Relation::kLessEqual, 1});
  return model;
}

TEST(SolveLpTest, DegenerateProblemTerminates) {
  const MilpSolution s = SolveLp(Beale());
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.objective_value, -1.25, 1e-9);
  LpOptions bland;
  bland.degenerate_limit = 1;
  const MilpSolution b = SolveLp(Beale(), bland);
  ASSERT_TRUE(b.optimal());
  EXPECT_NEAR(b.objective_value, -1.25, 1e-9);
}

TEST(SolveLpTest, IterationLimitSignalsNumericalError) {
  LpOptions tiny;
  tiny.iteration_limit = 1;
  EXPECT_THROW(SolveLp(Beale(), tiny), NumericalError);
}

TEST(SolveLpTest, MatchesVertexEnumeration) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-5, 5), rhs(-10, 20), ub(1, 10),
      nvar(1, 3), nrow(1, 4), rel(0, 2);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    MilpModel model;
    const int n = nvar(rng);
    for (int k = 0; k < n; ++k) {
      model.AddContinuous("v" + std::to_string(k), 0, ub(rng), coef(rng));
    }
    const int rows = nrow(rng);
    for (int r = 0; r < rows; ++r) {
      Constraint c{"r", {}, static_cast<Relation>(rel(rng)), double(rhs(rng))};
      for (int k = 0; k < n; ++k) c.terms.push_back({k, double(coef(rng))});
      model.AddConstraint(c);
    }
    const std::optional<double> expected = VertexEnumerationMinimum(model);
    for (int limit : {500, 1}) {
      LpOptions options;
      options.degenerate_limit = limit;
      const MilpSolution s = SolveLp(model, options);
      if (!expected) {
        EXPECT_EQ(s.status, SolveStatus::kInfeasible) << "trial " << trial;
        continue;
      }
      ASSERT_EQ(s.status, SolveStatus::kOptimal) << "trial " << trial;
      EXPECT_NEAR(s.objective_value, *expected, 1e-7) << "trial " << trial;
      EXPECT_LE(model.MaxViolation(s.values), 1e-7);
    }
    feasible += expected.has_value();
  }
  EXPECT_GT(feasible, 50);
}

TEST(SolveMilpTest, Example3x4SingleObjectives) {
  const IfctpInstance inst = Example3x4();
  const MilpModel center = BuildSingleObjective(inst, ObjectiveKind::kCenter);
  const MilpModel width = BuildSingleObjective(inst, ObjectiveKind::kWidth);
  const MilpModel lower = BuildSingleObjective(inst, ObjectiveKind::kLower);

  const MilpSolution relax = SolveLp(center);
  ASSERT_TRUE(relax.optimal());
  EXPECT_LE(relax.objective_value, 830.0 + 1e-9);

  const MilpSolution c = SolveMilp(center);
  const MilpSolution w = SolveMilp(width);
  const MilpSolution l = SolveMilp(lower);
  ASSERT_TRUE(c.optimal() && w.optimal() && l.optimal());
  EXPECT_NEAR(c.objective_value, 830.0, 830e-6);
  EXPECT_NEAR(w.objective_value, 163.0, 163e-6);
  EXPECT_NEAR(l.objective_value, 640.0, 640e-6);
  for (const MilpSolution* s : {&c, &w, &l}) {
    EXPECT_LT(s->stats.nodes, 4096);
    EXPECT_LE(center.MaxViolation(s->values), 1e-7);
    for (int k : center.binary_indices()) {
      EXPECT_TRUE(s->values[k] == 0.0 || s->values[k] == 1.0);
    }
  }
}

TEST(SolveMilpTest, Deterministic) {
  const MilpModel model =
      BuildSingleObjective(Example3x4(), ObjectiveKind::kWidth);
  const MilpSolution a = SolveMilp(model);
  const MilpSolution b = SolveMilp(model);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.stats.nodes, b.stats.nodes);
}

TEST(SolveMilpTest, NodeLimit) {
  MilpOptions options;
  options.node_limit = 1;
  EXPECT_THROW(
      SolveMilp(BuildSingleObjective(Example3x4(), ObjectiveKind::kCenter), options),
      ResourceLimitExceeded);
}

TEST(OracleTest, Example3x4) {
  const IfctpInstance inst = Example3x4();
  const MilpSolution c =
      OracleSolve(BuildSingleObjective(inst, ObjectiveKind::kCenter));
  const MilpSolution w =
      OracleSolve(BuildSingleObjective(inst, ObjectiveKind::kWidth));
  ASSERT_TRUE(c.optimal() && w.optimal());
  EXPECT_NEAR(c.objective_value, 830.0, 830e-6);
  EXPECT_NEAR(w.objective_value, 163.0, 163e-6);
  EXPECT_EQ(c.stats.lp_solves, 4096);
}

TEST(OracleTest, ForcedOffBinariesAreInfeasible) {
  MilpModel model;
  const int y = model.AddContinuous("y", 0, kInfinity, 1.0);
  const int x = model.AddBinary("x", 1.0);
  model.AddConstraint({"link", {{y, 1}, {x, -10}}, Relation::kLessEqual, 0});
  model.AddConstraint({"off", {{x, 1}}, Relation::kLessEqual, 0});
  model.AddConstraint({"demand", {{y, 1}}, Relation::kGreaterEqual, 3});
  EXPECT_EQ(OracleSolve(model).status, SolveStatus::kInfeasible);
  EXPECT_EQ(SolveMilp(model).status, SolveStatus::kInfeasible);
}

TEST(OracleTest, OutOfScope) {
  MilpModel model;
  for (int k = 0; k < 21; ++k) model.AddBinary("x" + std::to_string(k), 1.0);
  model.AddConstraint({"r", {{0, 1}}, Relation::kLessEqual, 1});
  EXPECT_THROW(OracleSolve(model), OracleOutOfScope);
}

TEST(MilpModelTest, ValidateRejectsMalformedModels) {
  MilpModel empty;
  empty.AddContinuous("y", 0, 1, 1);
  EXPECT_THROW(empty.Validate(), InvalidModel);

  MilpModel bad_binary;
  const int x = bad_binary.AddBinary("x", 1);
  bad_binary.set_bounds(x, 0, 2);
  bad_binary.AddConstraint({"r", {{x, 1}}, Relation::kLessEqual, 1});
  EXPECT_THROW(bad_binary.Validate(), InvalidModel);

  MilpModel free_var;
  free_var.AddContinuous("y", -kInfinity, 1, 1);
  free_var.AddConstraint({"r", {{0, 1}}, Relation::kLessEqual, 1});
  EXPECT_THROW(SolveLp(free_var), InvalidModel);
}

TEST(SolveMilpTest, AgreesWithOracleOnRandomInstances) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const IfctpInstance inst = RandomInstance(rng);
    const BiObjectiveMilp bi = BuildBiObjective(inst);
    std::vector<MilpModel> models = {
        BuildSingleObjective(inst, ObjectiveKind::kCenter),
        BuildSingleObjective(inst, ObjectiveKind::kWidth),
        BuildProblemIv(bi, BuildPayoff(bi)).model};
    for (const MilpModel& model : models) {
      const MilpSolution bnb = SolveMilp(model);
      const MilpSolution oracle = OracleSolve(model);
      ASSERT_EQ(bnb.status, oracle.status);
      EXPECT_LE(RelativeGap(bnb.objective_value, oracle.objective_value), 1e-6)
          << "trial " << trial;
      EXPECT_LE(bnb.stats.nodes, std::int64_t{2} << model.num_binaries());
      EXPECT_LE(SolveLp(model).objective_value * (model.sense() == Sense::kMaximize ? -1 : 1),
                bnb.objective_value * (model.sense() == Sense::kMaximize ? -1 : 1) + 1e-7);
    }
  }
}

}  // namespace
}  // namespace ifctp
