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
#include <random>

#include "gtest/gtest.h"
#include "test_support.h"

namespace ifctp {
namespace {

using ::ifctp::testing::RandomInstance;
using ::ifctp::testing::Example3x4;

constexpr PayoffOverride kReferencePayoff{640, 787, 163, 190};

// Binding memberships on the reference activation pattern give
// lambda = (16 + 996/201) / 27 = 52/67.
constexpr double kExample3x4Lambda = 52.0 / 67.0;

const Constraint& Row(const MilpModel& model, const std::string& name) {
  for (const Constraint& c : model.constraints()) {
    if (c.name == name) return c;
  }
  throw std::out_of_range(name);
}

double LambdaCoefficient(const Constraint& row, int lambda) {
  for (const LinearTerm& t : row.terms) {
    if (t.variable == lambda) return t.coefficient;
  }
  return 0.0;
}

TEST(MembershipTest, ClipsToUnitInterval) {
  const ObjectiveRange range{640, 787};
  EXPECT_EQ(Membership(600, range), 1.0);
  EXPECT_EQ(Membership(640, range), 1.0);
  EXPECT_EQ(Membership(787, range), 0.0);
  EXPECT_EQ(Membership(900, range), 0.0);
  EXPECT_NEAR(Membership(713.5, range), 0.5, 1e-12);
  EXPECT_EQ(Membership(5, ObjectiveRange{3, 3}), 1.0);
}

TEST(MembershipTest, RandomValuesStayInRange) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> v(-100, 100);
  for (int k = 0; k < 1000; ++k) {
    double lo = v(rng), hi = v(rng);
    if (lo > hi) std::swap(lo, hi);
    const double z = v(rng);
    const double mu = Membership(z, {lo, hi});
    EXPECT_GE(mu, 0.0);
    EXPECT_LE(mu, 1.0);
    if (hi > lo && z > lo && z < hi) {
      EXPECT_NEAR(mu, (hi - z) / (hi - lo), 1e-12);
    }
  }
}

TEST(PayoffTest, Example3x4) {
  const PayoffTable payoff = BuildPayoff(BuildBiObjective(Example3x4()));
  EXPECT_NEAR(payoff.lower.best, 640, 1e-6);
  EXPECT_NEAR(payoff.width.best, 163, 1e-6);
  EXPECT_NEAR(payoff.lower.worst, 787, 2);
  EXPECT_NEAR(payoff.width.worst, 190, 2);
  ASSERT_EQ(payoff.anchor_plans.size(), 2u);
}

TEST(PayoffTest, ZeroWidthInstance) {
  const PayoffTable payoff =
      BuildPayoff(BuildBiObjective(ZeroWidthCopy(Example3x4())));
  EXPECT_EQ(payoff.width.best, 0.0);
  EXPECT_EQ(payoff.width.worst, 0.0);
  EXPECT_TRUE(payoff.width.degenerate());
}

TEST(ProblemIvTest, MembershipRows) {
  const BiObjectiveMilp bi = BuildBiObjective(Example3x4());
  const ProblemIv iv = BuildProblemIv(bi, kReferencePayoff.ToTable());
  EXPECT_EQ(iv.model.sense(), Sense::kMaximize);
  const Constraint& lower = Row(iv.model, "membership(lower)");
  const Constraint& width = Row(iv.model, "membership(width)");
  EXPECT_EQ(LambdaCoefficient(lower, iv.lambda), 147.0);
  EXPECT_EQ(lower.rhs, 787.0);
  EXPECT_EQ(LambdaCoefficient(width, iv.lambda), 27.0);
  EXPECT_EQ(width.rhs, 190.0);
  EXPECT_EQ(iv.model.variables()[iv.lambda].lower, 0.0);
  EXPECT_EQ(iv.model.variables()[iv.lambda].upper, 1.0);
}

TEST(ProblemIvTest, DegenerateRangesDropLambda) {
  const BiObjectiveMilp bi = BuildBiObjective(Example3x4());
  const ProblemIv iv = BuildProblemIv(bi, PayoffOverride{830, 830, 200, 200}.ToTable());
  EXPECT_EQ(LambdaCoefficient(Row(iv.model, "membership(lower)"), iv.lambda), 0.0);
  EXPECT_EQ(LambdaCoefficient(Row(iv.model, "membership(width)"), iv.lambda), 0.0);

  const BiObjectiveMilp crisp = BuildBiObjective(ZeroWidthCopy(Example3x4()));
  const ProblemIv civ = BuildProblemIv(crisp, BuildPayoff(crisp));
  EXPECT_EQ(LambdaCoefficient(Row(civ.model, "membership(width)"), civ.lambda), 0.0);

  EXPECT_THROW(BuildProblemIv(bi, PayoffOverride{10, 5, 0, 1}.ToTable()),
               std::invalid_argument);
}

TEST(CompromiseTest, Example3x4WithReferencePayoff) {
  const CompromiseResult r =
      SolveCompromise(Example3x4(), CompromiseOptions{kReferencePayoff, {}});
  EXPECT_NEAR(r.lambda_star, kExample3x4Lambda, 1e-6);
  EXPECT_NEAR(r.lower_value, 672.82, 1.0);
  EXPECT_NEAR(r.width_value, 169.03, 0.5);
  EXPECT_NEAR(std::min(r.lower_membership, r.width_membership), r.lambda_star, 1e-6);
  EXPECT_TRUE(CheckPlan(Example3x4(), r.plan).empty());
  // Same activation pattern as the reference solution.
  for (auto [i, j] : {std::pair{0, 0}, {0, 2}, {1, 1}, {1, 3}, {2, 1}, {2, 2}}) {
    EXPECT_EQ(r.plan.active(i, j), 1);
  }
}

TEST(CompromiseTest, Example3x4WithComputedPayoff) {
  const CompromiseResult r = SolveCompromise(Example3x4());
  EXPECT_NEAR(r.lambda_star, 0.776, 0.005);
  EXPECT_NEAR(r.payoff.lower.worst, 787, 2);
}

TEST(CompromiseTest, ZeroWidthFollowsLowerObjective) {
  const IfctpInstance crisp = ZeroWidthCopy(Example3x4());
  const CompromiseResult r = SolveCompromise(crisp);
  EXPECT_EQ(r.width_value, 0.0);
  const MilpSolution direct =
      SolveMilp(BuildSingleObjective(crisp, ObjectiveKind::kLower));
  EXPECT_LE(RelativeGap(r.lower_value, direct.objective_value), 1e-6);
  EXPECT_NEAR(r.lambda_star, r.lower_membership, 1e-6);
}

TEST(CompromiseTest, CoincidingAnchorsGiveFullMembership) {
  IfctpInstance inst;
  inst.sources = 1;
  inst.destinations = 1;
  inst.unit_cost = Matrix<Interval>(1, 1, Interval(2, 4));
  inst.fixed_charge = Matrix<Interval>(1, 1, Interval(5, 9));
  inst.supply = {Interval(10, 10)};
  inst.demand = {Interval(6, 8)};
  const CompromiseResult r = SolveCompromise(inst);
  EXPECT_DOUBLE_EQ(r.lambda_star, 1.0);
  EXPECT_EQ(r.lower_membership, 1.0);
  EXPECT_EQ(r.width_membership, 1.0);
  EXPECT_NEAR(r.plan.quantity(0, 0), 6.0, 1e-9);
}

TEST(CompromiseTest, OverrideBelowAttainableIsInfeasible) {
  EXPECT_THROW(SolveCompromise(Example3x4(),
                               CompromiseOptions{PayoffOverride{100, 100, 0, 200}, {}}),
               InfeasibleProblem);
}

TEST(IdealTest, Example3x4) {
  const IdealPoint ideal = ComputeIdeal(Example3x4());
  EXPECT_NEAR(ideal.center, 830, 830e-6);
  EXPECT_NEAR(ideal.width, 163, 163e-6);
}

TEST(IdealTest, ZeroWidth) {
  const IfctpInstance crisp = ZeroWidthCopy(Example3x4());
  const IdealPoint ideal = ComputeIdeal(crisp);
  const MilpSolution direct =
      SolveMilp(BuildSingleObjective(crisp, ObjectiveKind::kCenter));
  EXPECT_NEAR(ideal.center, direct.objective_value, 1e-9);
  EXPECT_EQ(ideal.width, 0.0);
}

TEST(CompromiseTest, RandomInvariants) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const IfctpInstance inst = RandomInstance(rng);
    const CompromiseResult r = SolveCompromise(inst);
    EXPECT_GE(r.lambda_star, 0.0);
    EXPECT_LE(r.lambda_star, 1.0);
    EXPECT_NEAR(std::min(r.lower_membership, r.width_membership), r.lambda_star,
                1e-6)
        << "trial " << trial;
    EXPECT_TRUE(CheckPlan(inst, r.plan).empty());

    const BiObjectiveMilp bi = BuildBiObjective(inst);
    const DominanceCheck d = CheckDominance(bi, r.lower_value, r.width_value,
                                            DominanceSolver::kBranchAndBound);
    EXPECT_FALSE(d.dominated(1e-6 * std::max(1.0, r.lower_value)))
        << "trial " << trial;

    const IdealPoint ideal = ComputeIdeal(inst);
    const Interval z = EvaluateIntervalObjective(inst, r.plan);
    EXPECT_LE(ideal.center, z.center() + 1e-6);
    EXPECT_LE(ideal.width, z.width() + 1e-6);
  }
}

}  // namespace
}  // namespace ifctp
