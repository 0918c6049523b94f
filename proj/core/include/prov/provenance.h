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

#ifndef PROV_PROVENANCE_H_
#define PROV_PROVENANCE_H_

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "absl/strings/string_view.h"
#include "prov/validate.h"

namespace prov {

// Ordered by informativeness: Where < Why < How.
enum class ProvenanceLevel { kWhere = 0, kWhy = 1, kHow = 2 };

inline constexpr ProvenanceLevel kAllLevels[] = {
    ProvenanceLevel::kWhere, ProvenanceLevel::kWhy, ProvenanceLevel::kHow};

absl::string_view LevelName(ProvenanceLevel level);
std::optional<ProvenanceLevel> ParseLevel(absl::string_view name);

struct SourceAttribute {
  std::string relation;
  std::string attribute;

  // "Grades.Grade".
  std::string ToString() const;
  static std::optional<SourceAttribute> Parse(absl::string_view text);

  friend bool operator==(const SourceAttribute&, const SourceAttribute&) =
      default;
  friend auto operator<=>(const SourceAttribute&, const SourceAttribute&) =
      default;
};

struct AttributeLineage {
  std::string attribute;
  std::set<SourceAttribute> sources;
  friend bool operator==(const AttributeLineage&, const AttributeLineage&) =
      default;
};

// Where-provenance, computed statically from the query: for each output
// attribute the source attributes it is copied from (an aggregate result
// maps to its target's source), plus every relation the query reads.
struct WhereProvenance {
  std::vector<AttributeLineage> attributes;
  std::set<std::string> relations;

  const std::set<SourceAttribute>* SourcesOf(absl::string_view attribute) const;

  friend bool operator==(const WhereProvenance&, const WhereProvenance&) =
      default;
};

WhereProvenance WhereOfAst(const TypedQuery& query);

}  // namespace prov

#endif  // PROV_PROVENANCE_H_
