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

// End-to-end pipeline (validate, crispify, compromise, ideal point,
// distance) and its text / key=value renderings.

#ifndef IFCTP_REPORT_H_
#define IFCTP_REPORT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ifctp/compromise.h"
#include "ifctp/interval.h"
#include "ifctp/milp_model.h"
#include "ifctp/problem.h"

namespace ifctp {

enum class ReportFormat { kText, kMachineReadable };

// An externally obtained interval cost to compare against.
struct CompetitorEntry {
  std::string name;
  Interval objective;
};

// Parses "name=[lo,hi]".
CompetitorEntry ParseCompetitor(const std::string& text);

// Parses "L1,U1,L2,U2".
PayoffOverride ParsePayoffOverride(const std::string& text);

// Parses "center,width".
IdealPoint ParseIdeal(const std::string& text);

struct PipelineOptions {
  std::optional<PayoffOverride> payoff_override;
  std::optional<CompetitorEntry> competitor;
  double tolerance = kDefaultFeasibilityTolerance;
  MilpOptions milp;
};

struct CompromiseReport {
  SolveStatus status = SolveStatus::kOptimal;
  std::string status_detail;
  std::size_t sources = 0;
  std::size_t destinations = 0;
  PayoffTable payoff;
  bool payoff_overridden = false;
  double lambda_star = 0.0;
  double lower_membership = 0.0;
  double width_membership = 0.0;
  std::optional<ShipmentPlan> plan;
  Interval objective;
  IdealPoint ideal;
  std::vector<Violation> plan_violations;
  std::optional<CompetitorEntry> competitor;
  double tolerance = kDefaultFeasibilityTolerance;
};

// Infeasible instances yield a report with status kInfeasible and no plan.
CompromiseReport RunPipeline(const IfctpInstance& instance,
                             const PipelineOptions& options = {});

// Distance of the reported interval cost from the ideal point.
double ReportDistance(const CompromiseReport& report);

std::string Render(const CompromiseReport& report, ReportFormat format);

std::string RenderPayoff(const PayoffTable& payoff, ReportFormat format);
std::string RenderIdeal(const IdealPoint& ideal, ReportFormat format);

// Side-by-side distances of labelled interval costs from one ideal point.
struct Comparison {
  IdealPoint ideal;
  std::vector<CompetitorEntry> entries;
};

std::string RenderComparison(const Comparison& comparison,
                             ReportFormat format);

struct OracleCheckLine {
  std::string name;
  double solver_value = 0.0;
  double oracle_value = 0.0;
  double delta = 0.0;
  bool pass = false;
};

struct OracleCheckReport {
  std::vector<OracleCheckLine> lines;

  bool passed() const;
};

inline constexpr std::size_t kOracleMaxRoutes = 20;

// Cross-checks branch-and-bound against enumeration on the center, width and
// max-min models, and searches for a plan dominating the compromise. Throws
// OracleOutOfScope when m * n exceeds kOracleMaxRoutes.
OracleCheckReport RunOracleCheck(
    const IfctpInstance& instance,
    const std::optional<PayoffOverride>& payoff_override = std::nullopt);

std::string Render(const OracleCheckReport& report, ReportFormat format);

}  // namespace ifctp

#endif  // IFCTP_REPORT_H_
