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

#include "prov/reconstruct.h"

#include <map>

#include "absl/strings/str_cat.h"
#include "prov/status.h"

namespace prov {
namespace {

absl::Status LevelMismatch(absl::string_view what) {
  return MakeError(absl::StatusCode::kFailedPrecondition,
                   error_kind::kLevelMismatch, what);
}

// Decides, per source relation, which result column (if any) each attribute
// is recovered from.
class CellPlan {
 public:
  static absl::StatusOr<CellPlan> Create(const AnnotatedResult& result,
                                         const Catalog& catalog) {
    CellPlan plan;
    plan.generalized_ = result.generalized;
    for (const std::string& name : result.where.relations) {
      const Schema* schema = catalog.Find(name);
      if (schema == nullptr) {
        return MakeError(absl::StatusCode::kInvalidArgument,
                         error_kind::kUnknownRelationInLineage,
                         absl::StrCat("lineage names relation '", name,
                                      "' which is not in the catalog"));
      }
      plan.schemas_.emplace(name, *schema);
      plan.columns_[name].assign(schema->arity(), std::nullopt);
    }
    const AggregateExpr* agg = result.aggregate();
    const size_t copied = agg != nullptr && !result.schema.attributes.empty()
                              ? result.schema.arity() - 1
                              : result.schema.arity();
    for (size_t j = 0; j < result.schema.arity(); ++j) {
      std::optional<std::pair<std::string, size_t>> source =
          plan.UniqueSource(result, result.schema.attributes[j].name);
      if (!source.has_value()) continue;
      if (j < copied) {
        plan.columns_[source->first][source->second] = j;
      } else if (agg->fn != AggFn::kCount) {
        plan.target_ = source;
      }
    }
    return plan;
  }

  const std::map<std::string, Schema>& schemas() const { return schemas_; }
  bool Knows(const std::string& relation) const {
    return schemas_.count(relation) > 0;
  }

  // Cells of a tuple of `relation` derived from the result row `values`;
  // the aggregate target is left Null.
  std::vector<Cell> BaseCells(const std::string& relation,
                              const Row& values) const {
    const Schema& schema = schemas_.at(relation);
    const auto& columns = columns_.at(relation);
    std::vector<Cell> cells(schema.arity());
    for (size_t a = 0; a < schema.arity(); ++a) {
      if (columns[a].has_value()) {
        cells[a] = Recovered(relation, a, values[*columns[a]]);
      }
    }
    return cells;
  }

  // Index of the aggregate target attribute if it lives in `relation`.
  std::optional<size_t> TargetIn(const std::string& relation) const {
    if (!target_.has_value() || target_->first != relation) return std::nullopt;
    return target_->second;
  }

  Cell Recovered(const std::string& relation, size_t attribute,
                 const Value& v) const {
    if (v.is_null()) return Cell::Null();
    const SourceAttribute source{
        relation, schemas_.at(relation).attributes[attribute].name};
    if (generalized_.count(source) > 0) return Cell::Generalized(v.ToString());
    return Cell::Exact(v);
  }

 private:
  std::optional<std::pair<std::string, size_t>> UniqueSource(
      const AnnotatedResult& result, absl::string_view attribute) const {
    const std::set<SourceAttribute>* sources =
        result.where.SourcesOf(attribute);
    if (sources == nullptr || sources->size() != 1) return std::nullopt;
    const SourceAttribute& src = *sources->begin();
    auto it = schemas_.find(src.relation);
    if (it == schemas_.end() || ScanCount(result.query, src.relation) != 1) {
      return std::nullopt;
    }
    std::optional<size_t> index = it->second.IndexOf(src.attribute);
    if (!index.has_value()) return std::nullopt;
    return std::make_pair(src.relation, *index);
  }

  std::map<std::string, Schema> schemas_;
  std::map<std::string, std::vector<std::optional<size_t>>> columns_;
  std::optional<std::pair<std::string, size_t>> target_;
  std::set<SourceAttribute> generalized_;
};

class Builder {
 public:
  Builder(const CellPlan& plan, ProvenanceLevel level) {
    db_.level = level;
    for (const auto& [name, schema] : plan.schemas()) {
      index_[name] = db_.relations.size();
      db_.relations.push_back({schema, {}});
    }
  }

  absl::Status Add(const std::string& relation, ReconstructedTuple tuple) {
    auto it = index_.find(relation);
    if (it == index_.end()) {
      return MakeError(absl::StatusCode::kInvalidArgument,
                       error_kind::kUnknownRelationInLineage,
                       absl::StrCat("annotation names relation '", relation,
                                    "' which the query does not read"));
    }
    db_.relations[it->second].tuples.push_back(std::move(tuple));
    return absl::OkStatus();
  }

  ReconstructedDatabase Finish() && { return std::move(db_); }

 private:
  ReconstructedDatabase db_;
  std::map<std::string, size_t> index_;
};

}  // namespace

absl::string_view CellStatusName(CellStatus status) {
  switch (status) {
    case CellStatus::kExact: return "exact";
    case CellStatus::kInferred: return "inferred";
    case CellStatus::kNull: return "null";
    case CellStatus::kGeneralized: return "gen";
  }
  return "?";
}

std::optional<CellStatus> ParseCellStatus(absl::string_view name) {
  for (CellStatus s : {CellStatus::kExact, CellStatus::kInferred,
                       CellStatus::kNull, CellStatus::kGeneralized}) {
    if (CellStatusName(s) == name) return s;
  }
  return std::nullopt;
}

const ReconstructedRelation* ReconstructedDatabase::Find(
    absl::string_view relation) const {
  for (const ReconstructedRelation& rel : relations) {
    if (rel.schema.relation == relation) return &rel;
  }
  return nullptr;
}

size_t ReconstructedDatabase::tuple_count() const {
  size_t n = 0;
  for (const ReconstructedRelation& rel : relations) n += rel.tuples.size();
  return n;
}

absl::StatusOr<ReconstructedDatabase> ReconstructWhere(
    const AnnotatedResult& result, const Catalog& catalog) {
  PROV_ASSIGN_OR_RETURN(CellPlan plan, CellPlan::Create(result, catalog));
  Builder builder(plan, ProvenanceLevel::kWhere);
  for (size_t i = 0; i < result.tuples.size(); ++i) {
    for (const auto& [name, schema] : plan.schemas()) {
      PROV_RETURN_IF_ERROR(builder.Add(
          name, {i, std::nullopt, plan.BaseCells(name, result.tuples[i].values)}));
    }
  }
  return std::move(builder).Finish();
}

absl::StatusOr<ReconstructedDatabase> ReconstructWhy(
    const AnnotatedResult& result, const Catalog& catalog) {
  PROV_ASSIGN_OR_RETURN(CellPlan plan, CellPlan::Create(result, catalog));
  Builder builder(plan, ProvenanceLevel::kWhy);
  const AggregateExpr* agg = result.aggregate();
  const bool closed_form = agg != nullptr && agg->fn != AggFn::kCount;
  for (size_t i = 0; i < result.tuples.size(); ++i) {
    const ResultTuple& tuple = result.tuples[i];
    if (!tuple.why.has_value()) {
      return LevelMismatch(absl::StrCat("result tuple ", i,
                                        " carries no witness basis"));
    }
    for (const Witness& witness : tuple.why->witnesses()) {
      for (const TupleId& id : witness) {
        if (!plan.Knows(id.relation)) {
          PROV_RETURN_IF_ERROR(builder.Add(id.relation, {}));
        }
        ReconstructedTuple rec{i, id, plan.BaseCells(id.relation, tuple.values)};
        // An aggregate over a single tuple is that tuple's value.
        std::optional<size_t> target = plan.TargetIn(id.relation);
        if (closed_form && witness.size() == 1 && target.has_value() &&
            !tuple.values.back().is_null()) {
          rec.cells[*target] = Cell::Inferred(tuple.values.back());
        }
        PROV_RETURN_IF_ERROR(builder.Add(id.relation, std::move(rec)));
      }
    }
  }
  return std::move(builder).Finish();
}

absl::StatusOr<ReconstructedDatabase> ReconstructHow(
    const AnnotatedResult& result, const Catalog& catalog) {
  PROV_ASSIGN_OR_RETURN(CellPlan plan, CellPlan::Create(result, catalog));
  Builder builder(plan, ProvenanceLevel::kHow);
  const bool is_aggregate = result.aggregate() != nullptr;

  auto add_monomial_tuples = [&](size_t row, const Monomial& m,
                                 const Value* term_value) -> absl::Status {
    const TupleId* previous = nullptr;
    for (const TupleId& id : m) {
      if (previous != nullptr && *previous == id) continue;
      previous = &id;
      if (!plan.Knows(id.relation)) {
        PROV_RETURN_IF_ERROR(builder.Add(id.relation, {}));
      }
      ReconstructedTuple rec{row, id,
                             plan.BaseCells(id.relation, result.tuples[row].values)};
      std::optional<size_t> target = plan.TargetIn(id.relation);
      if (term_value != nullptr && target.has_value()) {
        rec.cells[*target] = plan.Recovered(id.relation, *target, *term_value);
      }
      PROV_RETURN_IF_ERROR(builder.Add(id.relation, std::move(rec)));
    }
    return absl::OkStatus();
  };

  for (size_t i = 0; i < result.tuples.size(); ++i) {
    const ResultTuple& tuple = result.tuples[i];
    if (is_aggregate) {
      if (!tuple.aggregation.has_value()) {
        return LevelMismatch(absl::StrCat("result tuple ", i,
                                          " carries no aggregation expression"));
      }
      const bool count = tuple.aggregation->fn == AggFn::kCount;
      for (const AggTerm& term : tuple.aggregation->terms) {
        for (const auto& [m, c] : term.annotation.terms()) {
          PROV_RETURN_IF_ERROR(
              add_monomial_tuples(i, m, count ? nullptr : &term.value));
        }
      }
    } else {
      if (!tuple.how.has_value()) {
        return LevelMismatch(absl::StrCat("result tuple ", i,
                                          " carries no provenance polynomial"));
      }
      for (const auto& [m, c] : tuple.how->terms()) {
        PROV_RETURN_IF_ERROR(add_monomial_tuples(i, m, nullptr));
      }
    }
  }
  return std::move(builder).Finish();
}

absl::StatusOr<ReconstructedDatabase> Reconstruct(const AnnotatedResult& result,
                                                  const Catalog& catalog,
                                                  ProvenanceLevel level) {
  if (level > result.level) {
    return LevelMismatch(absl::StrCat("cannot reconstruct at level ",
                                      LevelName(level), " from a result "
                                      "annotated at level ",
                                      LevelName(result.level)));
  }
  switch (level) {
    case ProvenanceLevel::kWhere: return ReconstructWhere(result, catalog);
    case ProvenanceLevel::kWhy: return ReconstructWhy(result, catalog);
    case ProvenanceLevel::kHow: return ReconstructHow(result, catalog);
  }
  return LevelMismatch("unknown level");
}

}  // namespace prov
