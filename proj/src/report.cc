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

#include "ifctp/report.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ifctp/crispify.h"
#include "ifctp/problem_file.h"

namespace ifctp {
namespace {

std::string Fixed2(double value) {
  if (std::fabs(value) < 0.005) value = 0.0;
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

std::string Text(const Interval& a) {
  return "[" + Fixed2(a.lo()) + "," + Fixed2(a.hi()) + "]";
}

std::string Text(const CenterWidth& cw) {
  return "<" + Fixed2(cw.center) + "," + Fixed2(cw.width) + ">";
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, ',')) parts.push_back(current);
  return parts;
}

double ParseDouble(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) {
    ++used;
  }
  if (used == 0 || used != text.size()) {
    throw ParseError(ParseErrorKind::kSyntax, 0,
                     "malformed number '" + text + "' in " + what);
  }
  return value;
}

const char* PreferenceLabel(Preference p) {
  switch (p) {
    case Preference::kFirstPreferred:
      return "proposed";
    case Preference::kSecondPreferred:
      return "competitor";
    case Preference::kTie:
      return "tie";
  }
  return "tie";
}

class KeyValueWriter {
 public:
  void Put(const std::string& key, const std::string& value) {
    os_ << key << "=" << value << "\n";
  }
  void Put(const std::string& key, double value) {
    Put(key, FormatNumber(value));
  }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

OracleCheckLine CompareSolves(const std::string& name, const MilpModel& model) {
  const MilpSolution bnb = SolveMilp(model);
  const MilpSolution oracle = OracleSolve(model);
  OracleCheckLine line{name, bnb.objective_value, oracle.objective_value, 0.0,
                       false};
  if (bnb.status != oracle.status) {
    line.delta = kInfinity;
    return line;
  }
  if (!bnb.optimal()) {
    line.solver_value = line.oracle_value = std::nan("");
    line.pass = true;
    return line;
  }
  line.delta = RelativeGap(bnb.objective_value, oracle.objective_value);
  line.pass = line.delta <= 1e-6;
  return line;
}

}  // namespace

CompetitorEntry ParseCompetitor(const std::string& text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ParseError(ParseErrorKind::kSyntax, 0,
                     "competitor must look like name=[lo,hi], got '" + text +
                         "'");
  }
  return {text.substr(0, eq), ParseInterval(text.substr(eq + 1))};
}

PayoffOverride ParsePayoffOverride(const std::string& text) {
  const std::vector<std::string> parts = SplitCommas(text);
  if (parts.size() != 4) {
    throw ParseError(ParseErrorKind::kSyntax, 0,
                     "payoff override needs L1,U1,L2,U2, got '" + text + "'");
  }
  PayoffOverride out{ParseDouble(parts[0], "payoff override"),
                     ParseDouble(parts[1], "payoff override"),
                     ParseDouble(parts[2], "payoff override"),
                     ParseDouble(parts[3], "payoff override")};
  if (out.lower_worst < out.lower_best || out.width_worst < out.width_best) {
    throw ParseError(ParseErrorKind::kValidation, 0,
                     "payoff override needs U1 >= L1 and U2 >= L2");
  }
  return out;
}

IdealPoint ParseIdeal(const std::string& text) {
  const std::vector<std::string> parts = SplitCommas(text);
  if (parts.size() != 2) {
    throw ParseError(ParseErrorKind::kSyntax, 0,
                     "ideal point needs center,width, got '" + text + "'");
  }
  IdealPoint ideal{ParseDouble(parts[0], "ideal point"),
                   ParseDouble(parts[1], "ideal point")};
  if (ideal.width < 0.0) {
    throw ParseError(ParseErrorKind::kMalformedInterval, 0,
                     "ideal width must be nonnegative");
  }
  return ideal;
}

CompromiseReport RunPipeline(const IfctpInstance& instance,
                             const PipelineOptions& options) {
  CompromiseReport report;
  report.sources = instance.sources;
  report.destinations = instance.destinations;
  report.competitor = options.competitor;
  report.tolerance = options.tolerance;
  report.payoff_overridden = options.payoff_override.has_value();
  try {
    const CompromiseResult result = SolveCompromise(
        instance, CompromiseOptions{options.payoff_override, options.milp});
    report.ideal = ComputeIdeal(instance, options.milp);
    report.payoff = result.payoff;
    report.lambda_star = result.lambda_star;
    report.lower_membership = result.lower_membership;
    report.width_membership = result.width_membership;
    report.plan = result.plan;
    report.objective = EvaluateIntervalObjective(instance, result.plan);
    report.plan_violations = CheckPlan(instance, result.plan, options.tolerance);
    report.status = SolveStatus::kOptimal;
  } catch (const InfeasibleProblem& e) {
    report.status = SolveStatus::kInfeasible;
    report.status_detail = e.what();
    report.plan.reset();
  }
  return report;
}

double ReportDistance(const CompromiseReport& report) {
  return DistanceToIdeal(report.objective.ToCenterWidth(),
                         report.ideal.ToCenterWidth());
}

std::string Render(const CompromiseReport& report, ReportFormat format) {
  const bool ok = report.status == SolveStatus::kOptimal && report.plan;
  if (format == ReportFormat::kMachineReadable) {
    KeyValueWriter out;
    out.Put("status", ToString(report.status));
    out.Put("sources", std::to_string(report.sources));
    out.Put("destinations", std::to_string(report.destinations));
    if (!ok) {
      out.Put("detail", report.status_detail);
      return out.str();
    }
    out.Put("payoff.source", report.payoff_overridden ? "override" : "computed");
    out.Put("payoff.lower.best", report.payoff.lower.best);
    out.Put("payoff.lower.worst", report.payoff.lower.worst);
    out.Put("payoff.width.best", report.payoff.width.best);
    out.Put("payoff.width.worst", report.payoff.width.worst);
    out.Put("lambda", report.lambda_star);
    out.Put("membership.lower", report.lower_membership);
    out.Put("membership.width", report.width_membership);
    out.Put("objective.lower", report.objective.lo());
    out.Put("objective.upper", report.objective.hi());
    out.Put("objective.center", report.objective.center());
    out.Put("objective.width", report.objective.width());
    out.Put("ideal.center", report.ideal.center);
    out.Put("ideal.width", report.ideal.width);
    out.Put("distance", ReportDistance(report));
    out.Put("plan.violations", std::to_string(report.plan_violations.size()));
    const ShipmentPlan& plan = *report.plan;
    for (std::size_t i = 0; i < report.sources; ++i) {
      for (std::size_t j = 0; j < report.destinations; ++j) {
        out.Put("plan." + CellLabel("y", i, j), plan.quantity(i, j));
      }
    }
    for (std::size_t i = 0; i < report.sources; ++i) {
      for (std::size_t j = 0; j < report.destinations; ++j) {
        out.Put("plan." + CellLabel("x", i, j),
                std::to_string(plan.active(i, j)));
      }
    }
    if (report.competitor) {
      const CompetitorEntry& c = *report.competitor;
      out.Put("competitor.name", c.name);
      out.Put("competitor.lower", c.objective.lo());
      out.Put("competitor.upper", c.objective.hi());
      out.Put("competitor.center", c.objective.center());
      out.Put("competitor.width", c.objective.width());
      out.Put("competitor.distance",
              DistanceToIdeal(c.objective.ToCenterWidth(),
                              report.ideal.ToCenterWidth()));
      out.Put("preferred",
              PreferenceLabel(Prefer(report.objective.ToCenterWidth(),
                                     c.objective.ToCenterWidth(),
                                     report.ideal.ToCenterWidth())));
    }
    return out.str();
  }

  std::ostringstream os;
  os << "Interval fixed-charge transportation: " << report.sources
     << " sources x " << report.destinations << " destinations\n";
  os << "Status: " << ToString(report.status) << "\n";
  if (!ok) {
    if (!report.status_detail.empty()) os << "Detail: " << report.status_detail << "\n";
    return os.str();
  }
  os << "\nPayoff table (" << (report.payoff_overridden ? "override" : "computed")
     << ")\n";
  os << "  z_lower: L = " << Fixed2(report.payoff.lower.best)
     << ", U = " << Fixed2(report.payoff.lower.worst) << "\n";
  os << "  z_width: L = " << Fixed2(report.payoff.width.best)
     << ", U = " << Fixed2(report.payoff.width.worst) << "\n";
  os << "\nCompromise\n";
  os << "  lambda*: " << Fixed2(report.lambda_star) << "\n";
  os << "  membership: z_lower " << Fixed2(report.lower_membership)
     << ", z_width " << Fixed2(report.width_membership) << "\n";
  os << "  Z = " << Text(report.objective) << " = "
     << Text(report.objective.ToCenterWidth()) << "\n";
  os << "  ideal: " << Text(report.ideal.ToCenterWidth()) << "\n";
  os << "  distance to ideal: " << Fixed2(ReportDistance(report)) << "\n";
  os << "\nShipment plan (active routes)\n";
  const ShipmentPlan& plan = *report.plan;
  for (std::size_t i = 0; i < report.sources; ++i) {
    for (std::size_t j = 0; j < report.destinations; ++j) {
      if (plan.active(i, j) == 0) continue;
      os << "  " << CellLabel("y", i, j) << " = " << Fixed2(plan.quantity(i, j))
         << "\n";
    }
  }
  if (report.plan_violations.empty()) {
    os << "  plan check: feasible\n";
  } else {
    for (const Violation& v : report.plan_violations) {
      os << "  plan check: " << v.ToString() << "\n";
    }
  }
  if (report.competitor) {
    const CompetitorEntry& c = *report.competitor;
    const CenterWidth ideal = report.ideal.ToCenterWidth();
    os << "\nComparison against ideal " << Text(ideal) << "\n";
    os << "  proposed: " << Text(report.objective) << " "
       << Text(report.objective.ToCenterWidth()) << " distance "
       << Fixed2(ReportDistance(report)) << "\n";
    os << "  " << c.name << ": " << Text(c.objective) << " "
       << Text(c.objective.ToCenterWidth()) << " distance "
       << Fixed2(DistanceToIdeal(c.objective.ToCenterWidth(), ideal)) << "\n";
    os << "  preferred: "
       << PreferenceLabel(Prefer(report.objective.ToCenterWidth(),
                                 c.objective.ToCenterWidth(), ideal))
       << "\n";
  }
  return os.str();
}

std::string RenderPayoff(const PayoffTable& payoff, ReportFormat format) {
  if (format == ReportFormat::kMachineReadable) {
    KeyValueWriter out;
    out.Put("payoff.lower.best", payoff.lower.best);
    out.Put("payoff.lower.worst", payoff.lower.worst);
    out.Put("payoff.width.best", payoff.width.best);
    out.Put("payoff.width.worst", payoff.width.worst);
    return out.str();
  }
  std::ostringstream os;
  os << "Payoff table\n";
  os << "  z_lower: L = " << Fixed2(payoff.lower.best)
     << ", U = " << Fixed2(payoff.lower.worst) << "\n";
  os << "  z_width: L = " << Fixed2(payoff.width.best)
     << ", U = " << Fixed2(payoff.width.worst) << "\n";
  return os.str();
}

std::string RenderIdeal(const IdealPoint& ideal, ReportFormat format) {
  if (format == ReportFormat::kMachineReadable) {
    KeyValueWriter out;
    out.Put("ideal.center", ideal.center);
    out.Put("ideal.width", ideal.width);
    return out.str();
  }
  return "Ideal point: " + Text(ideal.ToCenterWidth()) + "\n";
}

std::string RenderComparison(const Comparison& comparison,
                             ReportFormat format) {
  const CenterWidth ideal = comparison.ideal.ToCenterWidth();
  std::size_t best = 0;
  for (std::size_t k = 1; k < comparison.entries.size(); ++k) {
    if (Prefer(comparison.entries[k].objective.ToCenterWidth(),
               comparison.entries[best].objective.ToCenterWidth(),
               ideal) == Preference::kFirstPreferred) {
      best = k;
    }
  }
  if (format == ReportFormat::kMachineReadable) {
    KeyValueWriter out;
    out.Put("ideal.center", ideal.center);
    out.Put("ideal.width", ideal.width);
    for (std::size_t k = 0; k < comparison.entries.size(); ++k) {
      const CompetitorEntry& e = comparison.entries[k];
      const std::string prefix = "entry." + std::to_string(k + 1) + ".";
      out.Put(prefix + "name", e.name);
      out.Put(prefix + "lower", e.objective.lo());
      out.Put(prefix + "upper", e.objective.hi());
      out.Put(prefix + "center", e.objective.center());
      out.Put(prefix + "width", e.objective.width());
      out.Put(prefix + "distance",
              DistanceToIdeal(e.objective.ToCenterWidth(), ideal));
    }
    if (!comparison.entries.empty()) {
      out.Put("preferred", comparison.entries[best].name);
    }
    return out.str();
  }
  std::ostringstream os;
  os << "Distances from ideal " << Text(ideal) << "\n";
  for (const CompetitorEntry& e : comparison.entries) {
    os << "  " << e.name << ": " << Text(e.objective) << " "
       << Text(e.objective.ToCenterWidth()) << " distance "
       << Fixed2(DistanceToIdeal(e.objective.ToCenterWidth(), ideal)) << "\n";
  }
  if (!comparison.entries.empty()) {
    os << "  preferred: " << comparison.entries[best].name << "\n";
  }
  return os.str();
}

bool OracleCheckReport::passed() const {
  for (const OracleCheckLine& line : lines) {
    if (!line.pass) return false;
  }
  return !lines.empty();
}

OracleCheckReport RunOracleCheck(
    const IfctpInstance& instance,
    const std::optional<PayoffOverride>& payoff_override) {
  if (instance.sources * instance.destinations > kOracleMaxRoutes) {
    throw OracleOutOfScope(
        "oracle check supports at most " + std::to_string(kOracleMaxRoutes) +
        " routes, instance has " +
        std::to_string(instance.sources * instance.destinations));
  }
  const BiObjectiveMilp bi = BuildBiObjective(instance);
  OracleCheckReport report;
  report.lines.push_back(CompareSolves(
      "ideal.center", BuildSingleObjective(instance, ObjectiveKind::kCenter)));
  report.lines.push_back(CompareSolves(
      "ideal.width", BuildSingleObjective(instance, ObjectiveKind::kWidth)));

  const PayoffTable payoff =
      payoff_override ? payoff_override->ToTable() : BuildPayoff(bi);
  report.lines.push_back(
      CompareSolves("max-min.lambda", BuildProblemIv(bi, payoff).model));

  const CompromiseResult compromise =
      SolveCompromise(instance, CompromiseOptions{payoff_override, {}});
  const DominanceCheck dominance =
      CheckDominance(bi, compromise.lower_value, compromise.width_value,
                     DominanceSolver::kOracle);
  auto dominance_line = [](const std::string& name, double value,
                           double improvement) {
    const double tol = 1e-6 * std::max(1.0, std::fabs(value));
    return OracleCheckLine{name, value, value - improvement, improvement,
                           improvement <= tol};
  };
  report.lines.push_back(dominance_line(
      "dominance.lower", compromise.lower_value, dominance.lower_improvement));
  report.lines.push_back(dominance_line(
      "dominance.width", compromise.width_value, dominance.width_improvement));
  const std::size_t violations = CheckPlan(instance, compromise.plan).size();
  report.lines.push_back({"plan.feasibility", static_cast<double>(violations),
                          0.0, static_cast<double>(violations),
                          violations == 0});
  return report;
}

std::string Render(const OracleCheckReport& report, ReportFormat format) {
  if (format == ReportFormat::kMachineReadable) {
    KeyValueWriter out;
    for (const OracleCheckLine& line : report.lines) {
      const std::string prefix = "check." + line.name + ".";
      out.Put(prefix + "solver", line.solver_value);
      out.Put(prefix + "oracle", line.oracle_value);
      out.Put(prefix + "delta", line.delta);
      out.Put(prefix + "pass", line.pass ? "true" : "false");
    }
    out.Put("passed", report.passed() ? "true" : "false");
    return out.str();
  }
  std::ostringstream os;
  os << "Oracle cross-check\n";
  for (const OracleCheckLine& line : report.lines) {
    char delta[32];
    std::snprintf(delta, sizeof(delta), "%.2e", line.delta);
    os << "  " << (line.pass ? "PASS" : "FAIL") << "  " << line.name
       << ": solver " << Fixed2(line.solver_value) << ", oracle "
       << Fixed2(line.oracle_value) << ", delta " << delta << "\n";
  }
  os << (report.passed() ? "All checks passed\n" : "Some checks FAILED\n");
  return os.str();
}

}  // namespace ifctp
