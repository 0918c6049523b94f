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

#include "prov/privacy.h"

#include <algorithm>
#include <map>

#include "absl/strings/str_cat.h"
#include "prov/status.h"

namespace prov {
namespace {

absl::Status CheckAttribute(const SourceAttribute& attr,
                            const Catalog& catalog) {
  const Schema* schema = catalog.Find(attr.relation);
  if (schema == nullptr || !schema->IndexOf(attr.attribute).has_value()) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     error_kind::kPolicyAttributeUnknown,
                     absl::StrCat("policy names unknown attribute ",
                                  attr.ToString()));
  }
  return absl::OkStatus();
}

// Ground truth for a published result: the same query re-run at level why.
absl::StatusOr<AnnotatedResult> GroundTruth(const Database& source,
                                            const AnnotatedResult& result) {
  PROV_ASSIGN_OR_RETURN(TypedQuery query,
                        Validate(result.query, source.catalog()));
  AnnotatedResult truth = Evaluate(source, query, ProvenanceLevel::kWhy);
  if (truth.tuples.size() != result.tuples.size()) {
    return MakeError(absl::StatusCode::kFailedPrecondition,
                     error_kind::kInvariantViolation,
                     absl::StrCat("result has ", result.tuples.size(),
                                  " tuples but the query yields ",
                                  truth.tuples.size(), " on this source"));
  }
  return truth;
}

std::string RenderKeyCell(const Cell& cell) {
  switch (cell.status) {
    case CellStatus::kNull: return "null";
    case CellStatus::kGeneralized: return absl::StrCat("gen:", cell.label);
    default:
      return cell.value.is_text() ? absl::StrCat("'", cell.value.text(), "'")
                                  : cell.value.ToString();
  }
}

}  // namespace

absl::Status PrivacyPolicy::Validate(const Catalog& catalog) const {
  for (const SourceAttribute& attr : sensitive) {
    PROV_RETURN_IF_ERROR(CheckAttribute(attr, catalog));
  }
  for (const SourceAttribute& attr : quasi_identifiers) {
    PROV_RETURN_IF_ERROR(CheckAttribute(attr, catalog));
    if (sensitive.count(attr) > 0) {
      return MakeError(absl::StatusCode::kInvalidArgument,
                       error_kind::kInvalidPolicy,
                       absl::StrCat(attr.ToString(),
                                    " is both sensitive and a quasi-identifier"));
    }
  }
  if (k < 1) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     error_kind::kInvalidPolicy, "k must be at least 1");
  }
  return absl::OkStatus();
}

absl::string_view CellDisclosureName(CellDisclosure d) {
  switch (d) {
    case CellDisclosure::kDisclosedExact: return "disclosed-exact";
    case CellDisclosure::kDisclosedInferred: return "disclosed-inferred";
    case CellDisclosure::kProtectedNull: return "protected-null";
    case CellDisclosure::kProtectedGeneralized: return "protected-generalized";
    case CellDisclosure::kProtectedIncorrect: return "protected-incorrect";
  }
  return "?";
}

KAnonymityResult KAnonymity(const ReconstructedRelation& relation,
                            std::span<const std::string> qi) {
  std::vector<size_t> indices;
  for (const std::string& name : qi) {
    if (auto index = relation.schema.IndexOf(name)) indices.push_back(*index);
  }
  // Keys compare by (status kind, value/label) so that a generalized label
  // never collides with an identical ground value.
  using KeyCell = std::pair<int, Value>;
  std::map<std::vector<KeyCell>, std::pair<std::vector<std::string>, size_t>>
      classes;
  for (const ReconstructedTuple& tuple : relation.tuples) {
    std::vector<KeyCell> key;
    std::vector<std::string> rendered;
    for (size_t i : indices) {
      const Cell& cell = tuple.cells[i];
      switch (cell.status) {
        case CellStatus::kNull:
          key.emplace_back(0, Value::Null());
          break;
        case CellStatus::kGeneralized:
          key.emplace_back(2, Value::Txt(cell.label));
          break;
        default:
          key.emplace_back(1, cell.value);
      }
      rendered.push_back(RenderKeyCell(cell));
    }
    auto& entry = classes[key];
    entry.first = std::move(rendered);
    ++entry.second;
  }
  KAnonymityResult out;
  for (auto& [key, entry] : classes) {
    out.classes.push_back({std::move(entry.first), entry.second});
    out.k_min = std::min(out.k_min.value_or(entry.second), entry.second);
  }
  return out;
}

absl::StatusOr<std::vector<Row>> ZeroVarianceGroups(
    const Database& source, const AnnotatedResult& result,
    const SourceAttribute& sensitive) {
  const AggregateExpr* agg = result.aggregate();
  const std::set<SourceAttribute>* target_sources =
      result.schema.attributes.empty()
          ? nullptr
          : result.where.SourcesOf(result.schema.attributes.back().name);
  if (agg == nullptr || agg->fn == AggFn::kCount ||
      target_sources == nullptr || target_sources->count(sensitive) == 0) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     error_kind::kNotAnAggregateQuery,
                     absl::StrCat("query does not aggregate ",
                                  sensitive.ToString()));
  }
  const Relation* rel = source.Find(sensitive.relation);
  std::optional<size_t> column =
      rel ? rel->schema.IndexOf(sensitive.attribute) : std::nullopt;
  if (!column.has_value()) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     error_kind::kPolicyAttributeUnknown,
                     absl::StrCat("unknown attribute ", sensitive.ToString()));
  }
  PROV_ASSIGN_OR_RETURN(AnnotatedResult truth, GroundTruth(source, result));
  std::vector<Row> groups;
  for (const ResultTuple& tuple : truth.tuples) {
    std::set<Value> values;
    for (const TupleId& id : tuple.why->Tuples()) {
      if (id.relation == sensitive.relation) {
        values.insert(rel->rows[id.ordinal][*column]);
      }
    }
    if (values.size() == 1) {
      groups.emplace_back(tuple.values.begin(), tuple.values.end() - 1);
    }
  }
  return groups;
}

double DisclosureReport::leakage() const {
  if (sensitive_total == 0) return 0.0;
  return static_cast<double>(disclosed) / static_cast<double>(sensitive_total);
}

bool DisclosureReport::LeakageAtMost(const DisclosureReport& other) const {
  if (disclosed == 0) return true;
  if (other.sensitive_total == 0) return false;
  return disclosed * other.sensitive_total <= other.disclosed * sensitive_total;
}

absl::StatusOr<DisclosureReport> AnalyzeDisclosure(
    const ReconstructedDatabase& rec, const Database& source,
    const AnnotatedResult& result, const PrivacyPolicy& policy) {
  const Catalog catalog = source.catalog();
  PROV_RETURN_IF_ERROR(policy.Validate(catalog));
  PROV_ASSIGN_OR_RETURN(AnnotatedResult truth, GroundTruth(source, result));

  DisclosureReport report;
  report.level = rec.level;
  report.required_k = policy.k;

  std::set<TupleId> touched;
  for (const ResultTuple& tuple : truth.tuples) {
    std::set<TupleId> ids = tuple.why->Tuples();
    touched.insert(ids.begin(), ids.end());
  }
  auto sensitive_columns = [&](const Schema& schema) {
    std::vector<size_t> columns;
    for (size_t a = 0; a < schema.arity(); ++a) {
      if (policy.sensitive.count({schema.relation, schema.attributes[a].name})) {
        columns.push_back(a);
      }
    }
    return columns;
  };
  for (const TupleId& id : touched) {
    const Relation* rel = source.Find(id.relation);
    for (size_t a : sensitive_columns(rel->schema)) {
      if (!rel->rows[id.ordinal][a].is_null()) ++report.sensitive_total;
    }
  }

  std::set<std::pair<TupleId, size_t>> disclosed;
  for (const ReconstructedRelation& rel : rec.relations) {
    const Relation* src = source.Find(rel.schema.relation);
    if (src == nullptr) {
      return MakeError(absl::StatusCode::kFailedPrecondition,
                       error_kind::kInvariantViolation,
                       absl::StrCat("reconstruction names relation ",
                                    rel.schema.relation,
                                    " which the source lacks"));
    }
    const std::vector<size_t> columns = sensitive_columns(rel.schema);
    for (size_t r = 0; r < rel.tuples.size(); ++r) {
      const ReconstructedTuple& tuple = rel.tuples[r];
      std::vector<TupleId> candidates;
      if (tuple.origin.has_value()) {
        candidates.push_back(*tuple.origin);
      } else if (tuple.result_row < truth.tuples.size()) {
        for (const TupleId& id : truth.tuples[tuple.result_row].why->Tuples()) {
          if (id.relation == rel.schema.relation) candidates.push_back(id);
        }
      }
      for (size_t a : columns) {
        const Cell& cell = tuple.cells[a];
        CellClassification c{rel.schema.relation, r,
                             rel.schema.attributes[a].name, tuple.origin,
                             CellDisclosure::kProtectedNull};
        if (cell.status == CellStatus::kGeneralized) {
          c.disclosure = CellDisclosure::kProtectedGeneralized;
        } else if (cell.recovered()) {
          bool matched = false;
          for (const TupleId& id : candidates) {
            if (id.ordinal < src->rows.size() &&
                src->rows[id.ordinal][a] == cell.value) {
              disclosed.emplace(id, a);
              matched = true;
            }
          }
          if (!matched) {
            c.disclosure = CellDisclosure::kProtectedIncorrect;
          } else {
            c.disclosure = cell.status == CellStatus::kExact
                               ? CellDisclosure::kDisclosedExact
                               : CellDisclosure::kDisclosedInferred;
          }
        }
        report.cells.push_back(std::move(c));
      }
    }

    std::vector<std::string> qi;
    for (const Attribute& attr : rel.schema.attributes) {
      if (policy.quasi_identifiers.count({rel.schema.relation, attr.name})) {
        qi.push_back(attr.name);
      }
    }
    if (!qi.empty() && !rel.tuples.empty()) {
      KAnonymityResult k = KAnonymity(rel, qi);
      report.k_min = std::min(report.k_min.value_or(*k.k_min), *k.k_min);
      report.k_anonymity.emplace_back(rel.schema.relation, std::move(k));
    }
  }
  report.disclosed = disclosed.size();

  if (const AggregateExpr* agg = result.aggregate();
      agg != nullptr && agg->fn != AggFn::kCount) {
    const std::set<SourceAttribute>* sources =
        result.where.SourcesOf(result.schema.attributes.back().name);
    if (sources != nullptr) {
      for (const SourceAttribute& attr : *sources) {
        if (policy.sensitive.count(attr) == 0) continue;
        PROV_ASSIGN_OR_RETURN(std::vector<Row> groups,
                              ZeroVarianceGroups(source, result, attr));
        report.zero_variance_groups.insert(report.zero_variance_groups.end(),
                                           groups.begin(), groups.end());
      }
    }
  }

  if (report.disclosed > 0) {
    report.pass = false;
    report.reasons.push_back(absl::StrCat(report.disclosed, " of ",
                                          report.sensitive_total,
                                          " sensitive cells recovered"));
  }
  if (report.k_min.has_value() &&
      *report.k_min < static_cast<size_t>(policy.k)) {
    report.pass = false;
    report.reasons.push_back(absl::StrCat("k-anonymity ", *report.k_min,
                                          " is below the required ", policy.k));
  }
  return report;
}

absl::StatusOr<LevelComparison> CompareLevels(const Database& source,
                                              const TypedQuery& query,
                                              const PrivacyPolicy& policy) {
  LevelComparison out;
  const Catalog catalog = source.catalog();
  for (ProvenanceLevel level : kAllLevels) {
    AnnotatedResult result = Evaluate(source, query, level);
    PROV_ASSIGN_OR_RETURN(ReconstructedDatabase rec,
                          Reconstruct(result, catalog, level));
    PROV_ASSIGN_OR_RETURN(DisclosureReport report,
                          AnalyzeDisclosure(rec, source, result, policy));
    out.reports.push_back(std::move(report));
  }
  for (size_t i = 1; i < out.reports.size(); ++i) {
    if (!out.reports[i - 1].LeakageAtMost(out.reports[i])) {
      return MakeError(
          absl::StatusCode::kInternal, error_kind::kInvariantViolation,
          absl::StrCat("leakage at level ", LevelName(out.reports[i - 1].level),
                       " exceeds leakage at level ",
                       LevelName(out.reports[i].level)));
    }
  }
  return out;
}

}  // namespace prov
