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

#ifndef PROV_RECONSTRUCT_H_
#define PROV_RECONSTRUCT_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "prov/engine.h"
#include "prov/relation.h"

namespace prov {

enum class CellStatus { kExact, kInferred, kNull, kGeneralized };

absl::string_view CellStatusName(CellStatus status);  // "exact", "gen", ...
std::optional<CellStatus> ParseCellStatus(absl::string_view name);

// One reconstructed cell. Exact and Inferred cells carry a ground value,
// Generalized cells a hierarchy label, Null cells nothing.
struct Cell {
  Value value;
  CellStatus status = CellStatus::kNull;
  std::string label;

  static Cell Null() { return {}; }
  static Cell Exact(Value v) { return {std::move(v), CellStatus::kExact, ""}; }
  static Cell Inferred(Value v) {
    return {std::move(v), CellStatus::kInferred, ""};
  }
  static Cell Generalized(std::string label) {
    return {Value::Null(), CellStatus::kGeneralized, std::move(label)};
  }

  // Exact or Inferred.
  bool recovered() const {
    return status == CellStatus::kExact || status == CellStatus::kInferred;
  }

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct ReconstructedTuple {
  // Index of the result tuple this was derived from.
  size_t result_row = 0;
  // Source tuple this reconstructs; known at levels why and how only.
  std::optional<TupleId> origin;
  std::vector<Cell> cells;

  friend bool operator==(const ReconstructedTuple&,
                         const ReconstructedTuple&) = default;
};

struct ReconstructedRelation {
  Schema schema;
  std::vector<ReconstructedTuple> tuples;

  friend bool operator==(const ReconstructedRelation&,
                         const ReconstructedRelation&) = default;
};

// The partial source instance an observer can rebuild from a published
// result. Holds one relation per relation the query reads, in name order,
// each with its full catalog schema.
struct ReconstructedDatabase {
  ProvenanceLevel level = ProvenanceLevel::kWhere;
  std::vector<ReconstructedRelation> relations;

  const ReconstructedRelation* Find(absl::string_view relation) const;
  size_t tuple_count() const;
  bool empty() const { return tuple_count() == 0; }

  friend bool operator==(const ReconstructedDatabase&,
                         const ReconstructedDatabase&) = default;
};

// Cells are only copied back from a result column when that column is a
// plain copy of a source attribute of a relation the query scans exactly
// once; otherwise the column's origin tuple is ambiguous and cells stay Null.

// One tuple per (result tuple, relation read by the query). Group-by and
// projected attributes are Exact; everything else, including the aggregate
// target, is Null.
// Errors: UnknownRelationInLineage.
absl::StatusOr<ReconstructedDatabase> ReconstructWhere(
    const AnnotatedResult& result, const Catalog& catalog);

// One tuple per (result tuple, witness, member). Group-by and projected
// attributes are Exact. A singleton witness of an AVG/SUM/MIN/MAX group
// reveals the target value, which is filled in as Inferred.
// Errors: LevelMismatch when the result has no witnesses.
absl::StatusOr<ReconstructedDatabase> ReconstructWhy(
    const AnnotatedResult& result, const Catalog& catalog);

// One tuple per variable occurrence of each monomial (exponents collapse to
// presence); for aggregates, per occurrence in each AggExpr term, with the
// term's value recovered as the Exact target cell.
// Errors: LevelMismatch when the result has no how annotations.
absl::StatusOr<ReconstructedDatabase> ReconstructHow(
    const AnnotatedResult& result, const Catalog& catalog);

// Dispatches on `level`; any level up to the result's own is allowed.
// Errors: LevelMismatch if `level` exceeds the result's level.
absl::StatusOr<ReconstructedDatabase> Reconstruct(const AnnotatedResult& result,
                                                  const Catalog& catalog,
                                                  ProvenanceLevel level);

}  // namespace prov

#endif  // PROV_RECONSTRUCT_H_
