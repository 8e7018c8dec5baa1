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

// Command-line front end.
//
// Exit codes: 0 optimal, 1 failed cross-check or internal error,
// 2 infeasible, 3 parse/validation error, 4 resource limit.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ifctp/compromise.h"
#include "ifctp/crispify.h"
#include "ifctp/milp_model.h"
#include "ifctp/problem_file.h"
#include "ifctp/report.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitParse = 3;
constexpr int kExitResource = 4;

struct CommonFlags {
  std::string file;
  std::string override_payoff;
  std::string report = "text";
  double tolerance = ifctp::kDefaultFeasibilityTolerance;
};

ifctp::ReportFormat Format(const CommonFlags& flags) {
  return flags.report == "machine-readable" ? ifctp::ReportFormat::kMachineReadable
                                            : ifctp::ReportFormat::kText;
}

std::optional<ifctp::PayoffOverride> Override(const CommonFlags& flags) {
  if (flags.override_payoff.empty()) return std::nullopt;
  return ifctp::ParsePayoffOverride(flags.override_payoff);
}

void AddReportFlag(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--report", flags.report, "Report format")
      ->check(CLI::IsMember({"text", "machine-readable"}));
}

void AddOverrideFlag(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--override-payoff", flags.override_payoff,
                  "Payoff values L1,U1,L2,U2 used instead of the computed table");
}

int RunSolve(const CommonFlags& flags, const std::string& competitor) {
  ifctp::PipelineOptions options;
  options.payoff_override = Override(flags);
  options.tolerance = flags.tolerance;
  if (!competitor.empty()) options.competitor = ifctp::ParseCompetitor(competitor);
  const ifctp::IfctpInstance instance = ifctp::LoadInstance(flags.file);
  const ifctp::CompromiseReport report = ifctp::RunPipeline(instance, options);
  std::cout << ifctp::Render(report, Format(flags));
  return report.status == ifctp::SolveStatus::kOptimal ? kExitOk
                                                       : kExitInfeasible;
}

int RunCompare(const CommonFlags& flags, const std::string& competitor,
               const std::string& ideal, const std::string& proposed) {
  if (!flags.file.empty()) return RunSolve(flags, competitor);
  if (ideal.empty() || proposed.empty()) {
    throw ifctp::ParseError(
        ifctp::ParseErrorKind::kSyntax, 0,
        "compare needs an instance file, or both --ideal and --proposed");
  }
  ifctp::Comparison comparison;
  comparison.ideal = ifctp::ParseIdeal(ideal);
  comparison.entries.push_back({"proposed", ifctp::ParseInterval(proposed)});
  comparison.entries.push_back(ifctp::ParseCompetitor(competitor));
  std::cout << ifctp::RenderComparison(comparison, Format(flags));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval fixed-charge transportation solver"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string competitor;
  std::string ideal;
  std::string proposed;

  CLI::App* solve = app.add_subcommand(
      "solve", "Max-min compromise, ideal point and distance report");
  solve->add_option("file", flags.file, "Problem file")->required();
  AddOverrideFlag(solve, flags);
  AddReportFlag(solve, flags);
  solve->add_option("--tolerance", flags.tolerance,
                    "Feasibility tolerance for the plan check");
  solve->add_option("--competitor", competitor,
                    "External result name=[lo,hi] to compare against");

  CLI::App* ideal_cmd = app.add_subcommand(
      "ideal", "Minimum center and minimum width of the interval cost");
  ideal_cmd->add_option("file", flags.file, "Problem file")->required();
  AddReportFlag(ideal_cmd, flags);

  CLI::App* payoff = app.add_subcommand(
      "payoff", "Best and worst value of each crisp objective");
  payoff->add_option("file", flags.file, "Problem file")->required();
  AddReportFlag(payoff, flags);

  CLI::App* compare = app.add_subcommand(
      "compare", "Distance-to-ideal comparison against an external result");
  compare->add_option("file", flags.file, "Problem file (optional)");
  compare->add_option("--competitor", competitor, "name=[lo,hi]")->required();
  compare->add_option("--ideal", ideal,
                      "Ideal point center,width (when no file is given)");
  compare->add_option("--proposed", proposed,
                      "Proposed interval cost [lo,hi] (when no file is given)");
  AddOverrideFlag(compare, flags);
  AddReportFlag(compare, flags);
  compare->add_option("--tolerance", flags.tolerance,
                      "Feasibility tolerance for the plan check");

  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "Cross-check branch-and-bound against enumeration");
  oracle->add_option("file", flags.file, "Problem file")->required();
  AddOverrideFlag(oracle, flags);
  AddReportFlag(oracle, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return RunSolve(flags, competitor);
    if (compare->parsed()) return RunCompare(flags, competitor, ideal, proposed);

    const ifctp::IfctpInstance instance = ifctp::LoadInstance(flags.file);
    if (ideal_cmd->parsed()) {
      std::cout << ifctp::RenderIdeal(ifctp::ComputeIdeal(instance),
                                      Format(flags));
      return kExitOk;
    }
    if (payoff->parsed()) {
      std::cout << ifctp::RenderPayoff(
          ifctp::BuildPayoff(ifctp::BuildBiObjective(instance)), Format(flags));
      return kExitOk;
    }
    const ifctp::OracleCheckReport report =
        ifctp::RunOracleCheck(instance, Override(flags));
    std::cout << ifctp::Render(report, Format(flags));
    return report.passed() ? kExitOk : kExitCheckFailed;
  } catch (const ifctp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ifctp::InvalidInterval& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ifctp::BuildError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ifctp::InfeasibleProblem& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ifctp::ResourceLimitExceeded& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const ifctp::OracleOutOfScope& e) {
    std::cerr << "oracle-out-of-scope: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
