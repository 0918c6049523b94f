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

#ifndef PROV_JSON_IO_H_
#define PROV_JSON_IO_H_

#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "prov/engine.h"
#include "prov/mitigate.h"
#include "prov/privacy.h"
#include "prov/reconstruct.h"

namespace prov {

// All writers emit keys in a fixed order and end with a newline, so equal
// inputs give byte-identical documents. Numbers are written as JSON numbers
// and read back at four-decimal precision.

// {"query", "level", "schema", "where", "generalized", "tuples"}; each tuple
// has "values" plus "witnesses" (arrays of "Rel/ordinal") and "how" (the
// polynomial or AggExpr string) where the level provides them.
std::string ResultToJson(const AnnotatedResult& result);
absl::StatusOr<AnnotatedResult> ParseResultJson(absl::string_view json);

// {"level", "relations": [{"name", "attributes", "rows": [{"result_row",
// "origin", "cells": [{"v", "s", "label"?}]}]}]}
std::string ReconstructionToJson(const ReconstructedDatabase& rec);
absl::StatusOr<ReconstructedDatabase> ParseReconstructionJson(
    absl::string_view json);

// {"level", "verdict", "reasons", "leakage", "k_anonymity",
//  "zero_variance_groups", "cells"}
std::string ReportToJson(const DisclosureReport& report);
// {"levels": [summary rows], "reports": [full reports]}
std::string ComparisonToJson(const LevelComparison& comparison);
// {"before": report, "after": report}
std::string MitigationReportToJson(const DisclosureReport& before,
                                   const DisclosureReport& after);

// {"sensitive": ["Rel.Attr", ...], "quasi_identifiers": [...], "k": n}
absl::StatusOr<PrivacyPolicy> ParsePolicyJson(absl::string_view json);

// {"relation", "attribute", "levels": [<identity placeholder>, {value:
// label, ...}, {label: label, ...}, ...]}. The attribute type comes from
// `catalog`.
absl::StatusOr<GeneralizationHierarchy> ParseHierarchyJson(
    absl::string_view json, const Catalog& catalog);

}  // namespace prov

#endif  // PROV_JSON_IO_H_
