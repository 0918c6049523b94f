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

#ifndef PROV_PRIVACY_H_
#define PROV_PRIVACY_H_

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "prov/engine.h"
#include "prov/reconstruct.h"
#include "prov/relation.h"
#include "prov/validate.h"

namespace prov {

struct PrivacyPolicy {
  std::set<SourceAttribute> sensitive;
  std::set<SourceAttribute> quasi_identifiers;
  int k = 1;

  // Errors: PolicyAttributeUnknown for attributes missing from `catalog`,
  // InvalidPolicy for overlapping sets or k < 1.
  absl::Status Validate(const Catalog& catalog) const;
};

enum class CellDisclosure {
  kDisclosedExact,
  kDisclosedInferred,
  kProtectedNull,
  kProtectedGeneralized,
  // The cell claims a value that differs from the source, e.g. after
  // permutation.
  kProtectedIncorrect,
};

absl::string_view CellDisclosureName(CellDisclosure d);

// Classification of one sensitive cell of a reconstruction.
struct CellClassification {
  std::string relation;
  size_t tuple = 0;  // index within the reconstructed relation
  std::string attribute;
  std::optional<TupleId> origin;
  CellDisclosure disclosure = CellDisclosure::kProtectedNull;
};

struct EquivalenceClass {
  std::vector<std::string> key;  // rendered QI cells: value, "null", "gen:A"
  size_t size = 0;
  friend bool operator==(const EquivalenceClass&,
                         const EquivalenceClass&) = default;
};

struct KAnonymityResult {
  std::optional<size_t> k_min;  // nullopt for an empty relation
  std::vector<EquivalenceClass> classes;  // ordered by key
};

// Partitions tuples by their cells on `qi` (Null groups with Null,
// generalized cells by label). Unknown attribute names are ignored.
KAnonymityResult KAnonymity(const ReconstructedRelation& relation,
                            std::span<const std::string> qi);

// Group keys of an aggregate result whose source tuples all share a single
// value of `sensitive` (singleton groups included). Uses the source as
// ground truth.
// Errors: NotAnAggregateQuery unless the result aggregates `sensitive`
// with AVG, SUM, MIN or MAX.
absl::StatusOr<std::vector<Row>> ZeroVarianceGroups(
    const Database& source, const AnnotatedResult& result,
    const SourceAttribute& sensitive);

struct DisclosureReport {
  ProvenanceLevel level = ProvenanceLevel::kWhere;
  // Sensitive source cells recovered / non-null sensitive cells of tuples
  // touched by the query's witnesses.
  size_t disclosed = 0;
  size_t sensitive_total = 0;
  std::optional<size_t> k_min;
  int required_k = 1;
  std::vector<std::pair<std::string, KAnonymityResult>> k_anonymity;
  std::vector<Row> zero_variance_groups;
  std::vector<CellClassification> cells;
  bool pass = true;
  std::vector<std::string> reasons;

  // disclosed / sensitive_total, or 0 for an empty denominator.
  double leakage() const;
  bool LeakageAtMost(const DisclosureReport& other) const;
};

// Errors: PolicyAttributeUnknown, InvalidPolicy, InvariantViolation if the
// result was not produced from `source`.
absl::StatusOr<DisclosureReport> AnalyzeDisclosure(
    const ReconstructedDatabase& rec, const Database& source,
    const AnnotatedResult& result, const PrivacyPolicy& policy);

struct LevelComparison {
  std::vector<DisclosureReport> reports;  // where, why, how
};

// Evaluates, reconstructs and analyzes `query` at every level. Fails with
// InvariantViolation if leakage is not monotone in the level.
absl::StatusOr<LevelComparison> CompareLevels(const Database& source,
                                              const TypedQuery& query,
                                              const PrivacyPolicy& policy);

}  // namespace prov

#endif  // PROV_PRIVACY_H_
