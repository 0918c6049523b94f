//
// Copyright 2026 The Prov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// prov: file-based front end for the provenance pipeline.
//
//   prov run          evaluate a query with provenance
//   prov reconstruct  rebuild a partial source instance from a result
//   prov analyze      disclosure report; exit 3 when the policy fails
//   prov mitigate     generalize, suppress or permute before publishing
//
// Exit codes: 0 success/pass, 1 I/O error, 2 input error, 3 policy failure.

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "prov/database_io.h"
#include "prov/engine.h"
#include "prov/json_io.h"
#include "prov/mitigate.h"
#include "prov/parser.h"
#include "prov/privacy.h"
#include "prov/provenance.h"
#include "prov/reconstruct.h"
#include "prov/status.h"
#include "prov/validate.h"

namespace prov {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInput = 2;
constexpr int kExitPolicyFail = 3;

bool UseColor() {
  return std::getenv("PROV_NO_COLOR") == nullptr && isatty(STDERR_FILENO);
}

int Fail(const absl::Status& status) {
  const std::string kind = ErrorKind(status);
  const bool io = kind == error_kind::kMissingFile ||
                  kind == error_kind::kIoError;
  std::cerr << (UseColor() ? "\033[1;31merror:\033[0m " : "error: ")
            << status.message() << "\n";
  return io ? kExitIo : kExitInput;
}

absl::Status Emit(const std::string& out, const std::string& text) {
  if (out == "-") {
    std::cout << text << std::flush;
    return absl::OkStatus();
  }
  return WriteFile(out, text);
}

absl::StatusOr<ProvenanceLevel> LevelArg(const std::string& name) {
  std::optional<ProvenanceLevel> level = ParseLevel(name);
  if (!level.has_value()) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     error_kind::kSyntaxError,
                     absl::StrCat("unknown level '", name,
                                  "' (expected where, why or how)"));
  }
  return *level;
}

absl::StatusOr<SourceAttribute> AttributeArg(const std::string& text) {
  std::optional<SourceAttribute> attr = SourceAttribute::Parse(text);
  if (!attr.has_value()) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     error_kind::kSyntaxError,
                     absl::StrCat("expected Relation.Attribute, got '", text,
                                  "'"));
  }
  return *attr;
}

absl::StatusOr<TypedQuery> LoadQuery(const std::string& path,
                                     const Catalog& catalog) {
  PROV_ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  PROV_ASSIGN_OR_RETURN(Expr expr, Parse(text));
  return Validate(expr, catalog);
}

absl::StatusOr<AnnotatedResult> LoadResult(const std::string& path) {
  PROV_ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  return ParseResultJson(text);
}

absl::StatusOr<PrivacyPolicy> LoadPolicy(const std::string& path,
                                         const Catalog& catalog) {
  PROV_ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  PROV_ASSIGN_OR_RETURN(PrivacyPolicy policy, ParsePolicyJson(text));
  PROV_RETURN_IF_ERROR(policy.Validate(catalog));
  return policy;
}

void PrintSummary(const DisclosureReport& r) {
  std::cerr << absl::StrFormat(
      "%-6s leakage %zu/%zu (%.4f)  k_min %s  %s\n", LevelName(r.level),
      r.disclosed, r.sensitive_total, r.leakage(),
      r.k_min.has_value() ? absl::StrCat(*r.k_min) : "n/a",
      r.pass ? "PASS" : "FAIL");
}

struct RunArgs {
  std::string db, catalog, query, level = "how", out = "-";
};

absl::StatusOr<int> CmdRun(const RunArgs& a) {
  PROV_ASSIGN_OR_RETURN(Catalog catalog, LoadCatalog(a.catalog));
  PROV_ASSIGN_OR_RETURN(ProvenanceLevel level, LevelArg(a.level));
  PROV_ASSIGN_OR_RETURN(TypedQuery query, LoadQuery(a.query, catalog));
  PROV_ASSIGN_OR_RETURN(Database db, LoadDatabase(a.db, catalog));
  PROV_RETURN_IF_ERROR(Emit(a.out, ResultToJson(Evaluate(db, query, level))));
  return kExitOk;
}

struct ReconstructArgs {
  std::string result, catalog, level, out = "-";
};

absl::StatusOr<int> CmdReconstruct(const ReconstructArgs& a) {
  PROV_ASSIGN_OR_RETURN(Catalog catalog, LoadCatalog(a.catalog));
  PROV_ASSIGN_OR_RETURN(AnnotatedResult result, LoadResult(a.result));
  ProvenanceLevel level = result.level;
  if (!a.level.empty()) {
    PROV_ASSIGN_OR_RETURN(level, LevelArg(a.level));
  }
  PROV_ASSIGN_OR_RETURN(ReconstructedDatabase rec,
                        Reconstruct(result, catalog, level));
  PROV_RETURN_IF_ERROR(Emit(a.out, ReconstructionToJson(rec)));
  return kExitOk;
}

struct AnalyzeArgs {
  std::string db, catalog, query, policy, level, result, reconstruction;
  std::string out = "-";
  bool all_levels = false;
};

absl::StatusOr<int> CmdAnalyze(const AnalyzeArgs& a) {
  PROV_ASSIGN_OR_RETURN(Catalog catalog, LoadCatalog(a.catalog));
  PROV_ASSIGN_OR_RETURN(PrivacyPolicy policy, LoadPolicy(a.policy, catalog));
  PROV_ASSIGN_OR_RETURN(Database db, LoadDatabase(a.db, catalog));

  if (a.all_levels) {
    if (a.query.empty()) {
      return MakeError(absl::StatusCode::kInvalidArgument,
                       error_kind::kInvalidQuery,
                       "--all-levels needs --query");
    }
    PROV_ASSIGN_OR_RETURN(TypedQuery query, LoadQuery(a.query, catalog));
    PROV_ASSIGN_OR_RETURN(LevelComparison cmp,
                          CompareLevels(db, query, policy));
    bool pass = true;
    for (const DisclosureReport& r : cmp.reports) {
      PrintSummary(r);
      pass = pass && r.pass;
    }
    PROV_RETURN_IF_ERROR(Emit(a.out, ComparisonToJson(cmp)));
    return pass ? kExitOk : kExitPolicyFail;
  }

  AnnotatedResult result;
  if (!a.result.empty()) {
    PROV_ASSIGN_OR_RETURN(result, LoadResult(a.result));
  } else if (!a.query.empty()) {
    PROV_ASSIGN_OR_RETURN(TypedQuery query, LoadQuery(a.query, catalog));
    PROV_ASSIGN_OR_RETURN(
        ProvenanceLevel level,
        LevelArg(a.level.empty() ? std::string("how") : a.level));
    result = Evaluate(db, query, level);
  } else {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     error_kind::kInvalidQuery,
                     "one of --query or --result is required");
  }

  ReconstructedDatabase rec;
  if (!a.reconstruction.empty()) {
    PROV_ASSIGN_OR_RETURN(std::string text, ReadFile(a.reconstruction));
    PROV_ASSIGN_OR_RETURN(rec, ParseReconstructionJson(text));
  } else {
    ProvenanceLevel level = result.level;
    if (!a.level.empty()) {
      PROV_ASSIGN_OR_RETURN(level, LevelArg(a.level));
    }
    PROV_ASSIGN_OR_RETURN(rec, Reconstruct(result, catalog, level));
  }
  PROV_ASSIGN_OR_RETURN(DisclosureReport report,
                        AnalyzeDisclosure(rec, db, result, policy));
  PrintSummary(report);
  PROV_RETURN_IF_ERROR(Emit(a.out, ReportToJson(report)));
  return report.pass ? kExitOk : kExitPolicyFail;
}

struct MitigateArgs {
  std::string result, catalog, strategy, hierarchy, attribute, policy, db;
  std::string report, out = "-";
  size_t gen_level = 1;
  uint64_t seed = 0;
};

absl::StatusOr<int> CmdMitigate(const MitigateArgs& a) {
  PROV_ASSIGN_OR_RETURN(Catalog catalog, LoadCatalog(a.catalog));
  PROV_ASSIGN_OR_RETURN(AnnotatedResult result, LoadResult(a.result));

  std::optional<GeneralizationHierarchy> hierarchy;
  if (!a.hierarchy.empty()) {
    PROV_ASSIGN_OR_RETURN(std::string text, ReadFile(a.hierarchy));
    PROV_ASSIGN_OR_RETURN(hierarchy, ParseHierarchyJson(text, catalog));
  }
  std::optional<SourceAttribute> attribute;
  if (!a.attribute.empty()) {
    PROV_ASSIGN_OR_RETURN(attribute, AttributeArg(a.attribute));
  } else if (hierarchy.has_value()) {
    attribute = hierarchy->attribute();
  }

  // The published artifact after mitigation, and what an observer rebuilds
  // from it.
  std::string artifact;
  AnnotatedResult after_result = result;
  ReconstructedDatabase after;
  if (a.strategy == "generalize") {
    if (!hierarchy.has_value()) {
      return MakeError(absl::StatusCode::kInvalidArgument,
                       error_kind::kInvalidHierarchy,
                       "generalize needs --hierarchy");
    }
    PROV_ASSIGN_OR_RETURN(after_result,
                          GeneralizeResult(result, *hierarchy, a.gen_level));
    PROV_ASSIGN_OR_RETURN(after, Reconstruct(after_result, catalog,
                                             after_result.level));
    artifact = ResultToJson(after_result);
  } else if (a.strategy == "suppress" || a.strategy == "permute") {
    if (!attribute.has_value()) {
      return MakeError(absl::StatusCode::kInvalidArgument,
                       error_kind::kAttributeNotInResult,
                       absl::StrCat(a.strategy,
                                    " needs --attribute or --hierarchy"));
    }
    PROV_ASSIGN_OR_RETURN(ReconstructedDatabase rec,
                          Reconstruct(result, catalog, result.level));
    MitigationPlan plan = a.strategy == "suppress"
                              ? MitigationPlan(SuppressPlan{*attribute})
                              : MitigationPlan(PermutePlan{*attribute, a.seed});
    PROV_ASSIGN_OR_RETURN(after, ApplyPlan(rec, plan));
    artifact = ReconstructionToJson(after);
  } else {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     error_kind::kSyntaxError,
                     absl::StrCat("unknown strategy '", a.strategy, "'"));
  }

  if (!a.policy.empty() && !a.db.empty()) {
    PROV_ASSIGN_OR_RETURN(PrivacyPolicy policy, LoadPolicy(a.policy, catalog));
    PROV_ASSIGN_OR_RETURN(Database db, LoadDatabase(a.db, catalog));
    PROV_ASSIGN_OR_RETURN(ReconstructedDatabase before_rec,
                          Reconstruct(result, catalog, result.level));
    PROV_ASSIGN_OR_RETURN(DisclosureReport before,
                          AnalyzeDisclosure(before_rec, db, result, policy));
    PROV_ASSIGN_OR_RETURN(DisclosureReport now,
                          AnalyzeDisclosure(after, db, after_result, policy));
    std::cerr << "before: ";
    PrintSummary(before);
    std::cerr << "after:  ";
    PrintSummary(now);
    if (!a.report.empty()) {
      PROV_RETURN_IF_ERROR(
          Emit(a.report, MitigationReportToJson(before, now)));
    }
  }
  PROV_RETURN_IF_ERROR(Emit(a.out, artifact));
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Provenance-aware query evaluation and disclosure analysis"};
  app.require_subcommand(1);

  RunArgs run;
  CLI::App* run_cmd = app.add_subcommand("run", "Evaluate a query with provenance");
  run_cmd->add_option("--db", run.db, "Directory of <Relation>.csv files")
      ->required();
  run_cmd->add_option("--catalog", run.catalog, "Catalog JSON")->required();
  run_cmd->add_option("--query", run.query, "Query file")->required();
  run_cmd->add_option("--level", run.level, "where, why or how")
      ->capture_default_str();
  run_cmd->add_option("--out", run.out, "Output file, '-' for stdout")
      ->capture_default_str();

  ReconstructArgs rec;
  CLI::App* rec_cmd = app.add_subcommand(
      "reconstruct", "Rebuild a partial source instance from a result");
  rec_cmd->add_option("--result", rec.result, "Result JSON")->required();
  rec_cmd->add_option("--catalog", rec.catalog, "Catalog JSON")->required();
  rec_cmd->add_option("--level", rec.level,
                      "where, why or how (default: the result's level)");
  rec_cmd->add_option("--out", rec.out, "Output file, '-' for stdout")
      ->capture_default_str();

  AnalyzeArgs an;
  CLI::App* an_cmd =
      app.add_subcommand("analyze", "Disclosure report against a policy");
  an_cmd->add_option("--db", an.db, "Source database directory")->required();
  an_cmd->add_option("--catalog", an.catalog, "Catalog JSON")->required();
  an_cmd->add_option("--policy", an.policy, "Policy JSON")->required();
  an_cmd->add_option("--query", an.query, "Query file");
  an_cmd->add_option("--level", an.level, "where, why or how (default how)");
  an_cmd->add_flag("--all-levels", an.all_levels, "Compare all three levels");
  an_cmd->add_option("--result", an.result, "Analyze a stored result");
  an_cmd->add_option("--reconstruction", an.reconstruction,
                     "Analyze a stored reconstruction");
  an_cmd->add_option("--out", an.out, "Output file, '-' for stdout")
      ->capture_default_str();

  MitigateArgs mi;
  CLI::App* mi_cmd =
      app.add_subcommand("mitigate", "Generalize, suppress or permute");
  mi_cmd->add_option("--result", mi.result, "Result JSON")->required();
  mi_cmd->add_option("--catalog", mi.catalog, "Catalog JSON")->required();
  mi_cmd->add_option("--strategy", mi.strategy, "generalize|suppress|permute")
      ->required()
      ->check(CLI::IsMember({"generalize", "suppress", "permute"}));
  mi_cmd->add_option("--hierarchy", mi.hierarchy, "Hierarchy JSON");
  mi_cmd->add_option("--gen-level", mi.gen_level, "Generalization level")
      ->capture_default_str();
  mi_cmd->add_option("--attribute", mi.attribute,
                     "Relation.Attribute (default: the hierarchy's)");
  mi_cmd->add_option("--seed", mi.seed, "Permutation seed")
      ->capture_default_str();
  mi_cmd->add_option("--policy", mi.policy, "Policy JSON for a before/after report");
  mi_cmd->add_option("--db", mi.db, "Source database for the report");
  mi_cmd->add_option("--report", mi.report, "Before/after report output");
  mi_cmd->add_option("--out", mi.out, "Output file, '-' for stdout")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  absl::StatusOr<int> code = absl::InternalError("no subcommand");
  if (run_cmd->parsed()) code = CmdRun(run);
  if (rec_cmd->parsed()) code = CmdReconstruct(rec);
  if (an_cmd->parsed()) code = CmdAnalyze(an);
  if (mi_cmd->parsed()) code = CmdMitigate(mi);
  if (!code.ok()) return Fail(code.status());
  return *code;
}

}  // namespace
}  // namespace prov

int main(int argc, char** argv) { return prov::Main(argc, argv); }
