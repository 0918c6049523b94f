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

#ifndef PROV_MITIGATE_H_
#define PROV_MITIGATE_H_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "prov/engine.h"
#include "prov/reconstruct.h"
#include "prov/relation.h"

namespace prov {

// Value hierarchy for one source attribute. Level 0 is the identity; level
// 1 maps ground values to labels; each later level maps the previous
// level's labels to coarser labels, so values that share a label keep
// sharing it at every higher level.
class GeneralizationHierarchy {
 public:
  // `levels[i]` (i >= 1) is the level-i map; `levels[0]` is ignored. Keys of
  // level 1 are parsed according to `type`.
  // Errors: InvalidHierarchy when a key does not parse or a label has no
  // image at the next level.
  static absl::StatusOr<GeneralizationHierarchy> Create(
      SourceAttribute attribute, AttributeType type,
      std::vector<std::map<std::string, std::string>> levels);

  const SourceAttribute& attribute() const { return attribute_; }
  // Including level 0.
  size_t level_count() const { return upper_.size() + 2; }
  // The ground values covered by level 1.
  std::vector<Value> Domain() const;

  // Label of `v` at `level` >= 1.
  // Errors: ValueNotInHierarchy, InvalidHierarchy for a bad level.
  absl::StatusOr<std::string> Label(const Value& v, size_t level) const;

 private:
  SourceAttribute attribute_;
  std::map<Value, std::string> ground_;
  std::vector<std::map<std::string, std::string>> upper_;  // levels 2..
};

// Replaces every AggExpr term value and every output cell copied from the
// hierarchy's attribute by its label at `level`; such output columns become
// Text. Provenance structure is untouched. Level 0 is the identity.
// Errors: AttributeNotInResult, ValueNotInHierarchy, InvalidHierarchy.
absl::StatusOr<AnnotatedResult> GeneralizeResult(
    const AnnotatedResult& result, const GeneralizationHierarchy& hierarchy,
    size_t level);

// Turns every Exact/Inferred cell of the hierarchy's attribute into a
// Generalized cell carrying its label. Level 0 is the identity.
absl::StatusOr<ReconstructedDatabase> GeneralizeReconstruction(
    const ReconstructedDatabase& rec, const GeneralizationHierarchy& hierarchy,
    size_t level);

using CellPredicate =
    std::function<bool(absl::string_view relation, absl::string_view attribute,
                       CellStatus status)>;

// Sets every cell matching `pred` to Null. Tuple counts are unchanged.
ReconstructedDatabase Suppress(const ReconstructedDatabase& rec,
                               const CellPredicate& pred);

CellPredicate MatchAttribute(SourceAttribute attribute);

// Deterministic permutation of 0..n-1: Fisher-Yates from the last index
// down, drawing j = next() % (i + 1) from the minimal-standard LCG
// (multiplier 48271, modulus 2^31 - 1) seeded with `seed`.
// Output position k receives input position result[k].
std::vector<size_t> SeededPermutation(size_t n, uint64_t seed);

// Reorders one column of `relation` by SeededPermutation; other columns and
// tuple ids stay in place. Errors: UnknownAttribute.
absl::StatusOr<Relation> PermuteColumn(const Relation& relation,
                                       absl::string_view attribute,
                                       uint64_t seed);

// Permutes the recovered (Exact/Inferred) cells of one attribute among
// themselves.
absl::StatusOr<ReconstructedDatabase> PermuteReconstruction(
    const ReconstructedDatabase& rec, const SourceAttribute& attribute,
    uint64_t seed);

struct GeneralizePlan {
  GeneralizationHierarchy hierarchy;
  size_t level = 1;
};
struct SuppressPlan {
  SourceAttribute attribute;
};
struct PermutePlan {
  SourceAttribute attribute;
  uint64_t seed = 0;
};
using MitigationPlan = std::variant<GeneralizePlan, SuppressPlan, PermutePlan>;

absl::StatusOr<ReconstructedDatabase> ApplyPlan(const ReconstructedDatabase& rec,
                                                const MitigationPlan& plan);

}  // namespace prov

#endif  // PROV_MITIGATE_H_
