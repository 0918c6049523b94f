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

#include "prov/mitigate.h"

#include <random>
#include <set>

#include "absl/strings/str_cat.h"
#include "prov/status.h"

namespace prov {
namespace {

absl::Status InvalidHierarchy(absl::string_view what) {
  return MakeError(absl::StatusCode::kInvalidArgument,
                   error_kind::kInvalidHierarchy, what);
}

}  // namespace

absl::StatusOr<GeneralizationHierarchy> GeneralizationHierarchy::Create(
    SourceAttribute attribute, AttributeType type,
    std::vector<std::map<std::string, std::string>> levels) {
  if (levels.size() < 2) {
    return InvalidHierarchy("a hierarchy needs at least one level above 0");
  }
  GeneralizationHierarchy h;
  h.attribute_ = std::move(attribute);
  for (const auto& [key, label] : levels[1]) {
    Value v;
    if (type == AttributeType::kNumber) {
      absl::StatusOr<Decimal> d = Decimal::Parse(key);
      if (!d.ok()) {
        return InvalidHierarchy(absl::StrCat("'", key, "' is not a number"));
      }
      v = Value::Num(*d);
    } else {
      v = Value::Txt(key);
    }
    if (!h.ground_.emplace(std::move(v), label).second) {
      return InvalidHierarchy(absl::StrCat("value '", key, "' listed twice"));
    }
  }
  std::set<std::string> previous;
  for (const auto& [v, label] : h.ground_) previous.insert(label);
  for (size_t i = 2; i < levels.size(); ++i) {
    std::set<std::string> next;
    for (const std::string& label : previous) {
      auto it = levels[i].find(label);
      if (it == levels[i].end()) {
        return InvalidHierarchy(absl::StrCat("label '", label,
                                             "' has no image at level ", i));
      }
      next.insert(it->second);
    }
    previous = std::move(next);
    h.upper_.push_back(std::move(levels[i]));
  }
  return h;
}

std::vector<Value> GeneralizationHierarchy::Domain() const {
  std::vector<Value> out;
  for (const auto& [v, label] : ground_) out.push_back(v);
  return out;
}

absl::StatusOr<std::string> GeneralizationHierarchy::Label(const Value& v,
                                                           size_t level) const {
  if (level == 0 || level >= level_count()) {
    return InvalidHierarchy(absl::StrCat("level ", level, " out of range 1..",
                                         level_count() - 1));
  }
  auto it = ground_.find(v);
  if (it == ground_.end()) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     error_kind::kValueNotInHierarchy,
                     absl::StrCat("value '", v.ToString(), "' of ",
                                  attribute_.ToString(),
                                  " is not in the hierarchy"));
  }
  std::string label = it->second;
  for (size_t i = 2; i <= level; ++i) label = upper_[i - 2].at(label);
  return label;
}

absl::StatusOr<AnnotatedResult> GeneralizeResult(
    const AnnotatedResult& result, const GeneralizationHierarchy& hierarchy,
    size_t level) {
  if (level >= hierarchy.level_count()) {
    return InvalidHierarchy(absl::StrCat("level ", level, " out of range"));
  }
  const SourceAttribute& attr = hierarchy.attribute();
  const AggregateExpr* agg = result.aggregate();
  const size_t copied = agg != nullptr ? result.schema.arity() - 1
                                       : result.schema.arity();
  std::vector<size_t> columns;
  for (size_t j = 0; j < copied; ++j) {
    const auto* sources = result.where.SourcesOf(result.schema.attributes[j].name);
    if (sources != nullptr && sources->size() == 1 && *sources->begin() == attr) {
      columns.push_back(j);
    }
  }
  bool terms = false;
  if (agg != nullptr && agg->fn != AggFn::kCount) {
    const auto* sources =
        result.where.SourcesOf(result.schema.attributes.back().name);
    terms = sources != nullptr && sources->count(attr) > 0;
  }
  if (columns.empty() && !terms) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     error_kind::kAttributeNotInResult,
                     absl::StrCat(attr.ToString(),
                                  " is neither copied nor aggregated by ",
                                  PrintExpr(result.query)));
  }
  if (level == 0) return result;

  auto generalize = [&](Value& v) -> absl::Status {
    if (v.is_null()) return absl::OkStatus();
    PROV_ASSIGN_OR_RETURN(std::string label, hierarchy.Label(v, level));
    v = Value::Txt(std::move(label));
    return absl::OkStatus();
  };

  AnnotatedResult out = result;
  for (ResultTuple& tuple : out.tuples) {
    for (size_t j : columns) PROV_RETURN_IF_ERROR(generalize(tuple.values[j]));
    if (terms && tuple.aggregation.has_value()) {
      for (AggTerm& term : tuple.aggregation->terms) {
        PROV_RETURN_IF_ERROR(generalize(term.value));
      }
    }
  }
  for (size_t j : columns) {
    out.schema.attributes[j].type = AttributeType::kText;
  }
  out.generalized.insert(attr);
  return out;
}

absl::StatusOr<ReconstructedDatabase> GeneralizeReconstruction(
    const ReconstructedDatabase& rec, const GeneralizationHierarchy& hierarchy,
    size_t level) {
  if (level >= hierarchy.level_count()) {
    return InvalidHierarchy(absl::StrCat("level ", level, " out of range"));
  }
  if (level == 0) return rec;
  ReconstructedDatabase out = rec;
  const SourceAttribute& attr = hierarchy.attribute();
  for (ReconstructedRelation& rel : out.relations) {
    if (rel.schema.relation != attr.relation) continue;
    std::optional<size_t> column = rel.schema.IndexOf(attr.attribute);
    if (!column.has_value()) continue;
    for (ReconstructedTuple& tuple : rel.tuples) {
      Cell& cell = tuple.cells[*column];
      if (!cell.recovered()) continue;
      PROV_ASSIGN_OR_RETURN(std::string label,
                            hierarchy.Label(cell.value, level));
      cell = Cell::Generalized(std::move(label));
    }
  }
  return out;
}

ReconstructedDatabase Suppress(const ReconstructedDatabase& rec,
                               const CellPredicate& pred) {
  ReconstructedDatabase out = rec;
  for (ReconstructedRelation& rel : out.relations) {
    for (ReconstructedTuple& tuple : rel.tuples) {
      for (size_t a = 0; a < tuple.cells.size(); ++a) {
        if (pred(rel.schema.relation, rel.schema.attributes[a].name,
                 tuple.cells[a].status)) {
          tuple.cells[a] = Cell::Null();
        }
      }
    }
  }
  return out;
}

CellPredicate MatchAttribute(SourceAttribute attribute) {
  return [attribute = std::move(attribute)](absl::string_view relation,
                                            absl::string_view name, CellStatus) {
    return relation == attribute.relation && name == attribute.attribute;
  };
}

std::vector<size_t> SeededPermutation(size_t n, uint64_t seed) {
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::minstd_rand engine(
      static_cast<std::minstd_rand::result_type>(seed % std::minstd_rand::modulus));
  for (size_t i = n; i-- > 1;) {
    const size_t j = static_cast<size_t>(engine() % (i + 1));
    std::swap(order[i], order[j]);
  }
  return order;
}

absl::StatusOr<Relation> PermuteColumn(const Relation& relation,
                                       absl::string_view attribute,
                                       uint64_t seed) {
  std::optional<size_t> column = relation.schema.IndexOf(attribute);
  if (!column.has_value()) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     error_kind::kUnknownAttribute,
                     absl::StrCat("no attribute '", attribute, "' in ",
                                  relation.schema.relation));
  }
  const std::vector<size_t> order = SeededPermutation(relation.rows.size(), seed);
  Relation out = relation;
  for (size_t k = 0; k < order.size(); ++k) {
    out.rows[k][*column] = relation.rows[order[k]][*column];
  }
  return out;
}

absl::StatusOr<ReconstructedDatabase> PermuteReconstruction(
    const ReconstructedDatabase& rec, const SourceAttribute& attribute,
    uint64_t seed) {
  ReconstructedDatabase out = rec;
  bool found = false;
  for (ReconstructedRelation& rel : out.relations) {
    if (rel.schema.relation != attribute.relation) continue;
    std::optional<size_t> column = rel.schema.IndexOf(attribute.attribute);
    if (!column.has_value()) break;
    found = true;
    std::vector<Cell*> cells;
    for (ReconstructedTuple& tuple : rel.tuples) {
      if (tuple.cells[*column].recovered()) cells.push_back(&tuple.cells[*column]);
    }
    std::vector<Cell> original;
    for (const Cell* c : cells) original.push_back(*c);
    const std::vector<size_t> order = SeededPermutation(cells.size(), seed);
    for (size_t k = 0; k < order.size(); ++k) *cells[k] = original[order[k]];
  }
  if (!found && rec.Find(attribute.relation) != nullptr) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     error_kind::kUnknownAttribute,
                     absl::StrCat("no attribute ", attribute.ToString()));
  }
  return out;
}

absl::StatusOr<ReconstructedDatabase> ApplyPlan(const ReconstructedDatabase& rec,
                                                const MitigationPlan& plan) {
  return std::visit(
      [&](const auto& p) -> absl::StatusOr<ReconstructedDatabase> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GeneralizePlan>) {
          return GeneralizeReconstruction(rec, p.hierarchy, p.level);
        } else if constexpr (std::is_same_v<T, SuppressPlan>) {
          return Suppress(rec, MatchAttribute(p.attribute));
        } else {
          return PermuteReconstruction(rec, p.attribute, p.seed);
        }
      },
      plan);
}

}  // namespace prov
