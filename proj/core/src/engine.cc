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

#include "prov/engine.h"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace prov {
namespace {

// Annotation for where-level evaluation, where tuples carry nothing.
struct Presence {
  static Presence Var(const TupleId&) { return {}; }
  Presence& operator+=(const Presence&) { return *this; }
  friend Presence operator*(const Presence&, const Presence&) { return {}; }
};

template <typename K>
struct KRelation {
  std::vector<Attribute> attributes;
  std::map<Row, K> rows;

  size_t IndexOf(absl::string_view name) const {
    for (size_t i = 0; i < attributes.size(); ++i) {
      if (attributes[i].name == name) return i;
    }
    return attributes.size();
  }

  void Add(Row row, const K& annotation) {
    auto [it, inserted] = rows.try_emplace(std::move(row), annotation);
    if (!inserted) it->second += annotation;
  }
};

bool Holds(CompareOp op, std::strong_ordering cmp) {
  switch (op) {
    case CompareOp::kEq: return cmp == 0;
    case CompareOp::kNe: return cmp != 0;
    case CompareOp::kLt: return cmp < 0;
    case CompareOp::kGt: return cmp > 0;
    case CompareOp::kLe: return cmp <= 0;
    case CompareOp::kGe: return cmp >= 0;
  }
  return false;
}

template <typename K>
bool Satisfies(const Row& row, const Predicate& pred, const KRelation<K>& rel) {
  for (const Comparison& c : pred.conjuncts) {
    const Value& lhs = row[rel.IndexOf(c.lhs)];
    const Value& rhs = std::holds_alternative<AttrRef>(c.rhs)
                           ? row[rel.IndexOf(std::get<AttrRef>(c.rhs).name)]
                           : std::get<Value>(c.rhs);
    std::optional<std::strong_ordering> cmp = SqlCompare(lhs, rhs);
    if (!cmp.has_value() || !Holds(c.op, *cmp)) return false;
  }
  return true;
}

// Evaluates a select-project-join expression.
template <typename K>
KRelation<K> EvalSpj(const Database& db, const Expr& expr) {
  return std::visit(
      [&](const auto& node) -> KRelation<K> {
        using T = std::decay_t<decltype(node)>;
        KRelation<K> out;
        if constexpr (std::is_same_v<T, ScanExpr>) {
          const Relation* rel = db.Find(node.relation);
          if (rel == nullptr) return out;
          out.attributes = rel->schema.attributes;
          for (size_t i = 0; i < rel->rows.size(); ++i) {
            out.Add(rel->rows[i], K::Var(rel->IdOf(i)));
          }
        } else if constexpr (std::is_same_v<T, SelectExpr>) {
          KRelation<K> in = EvalSpj<K>(db, *node.input);
          out.attributes = in.attributes;
          for (auto& [row, annotation] : in.rows) {
            if (Satisfies(row, node.predicate, in)) {
              out.rows.emplace(row, std::move(annotation));
            }
          }
        } else if constexpr (std::is_same_v<T, ProjectExpr>) {
          KRelation<K> in = EvalSpj<K>(db, *node.input);
          std::vector<size_t> indices;
          for (const std::string& name : node.attributes) {
            indices.push_back(in.IndexOf(name));
            out.attributes.push_back(in.attributes[indices.back()]);
          }
          for (const auto& [row, annotation] : in.rows) {
            Row projected;
            projected.reserve(indices.size());
            for (size_t i : indices) projected.push_back(row[i]);
            out.Add(std::move(projected), annotation);
          }
        } else if constexpr (std::is_same_v<T, JoinExpr>) {
          KRelation<K> left = EvalSpj<K>(db, *node.left);
          KRelation<K> right = EvalSpj<K>(db, *node.right);
          std::vector<std::pair<size_t, size_t>> keys;
          for (const auto& [l, r] : node.on) {
            keys.emplace_back(left.IndexOf(l), right.IndexOf(r));
          }
          out.attributes = left.attributes;
          out.attributes.insert(out.attributes.end(), right.attributes.begin(),
                                right.attributes.end());
          // Bucket the right side by its key values. Null keys never match.
          auto key_of = [&](const Row& row, bool left_side) -> std::optional<Row> {
            Row key;
            for (const auto& [l, r] : keys) {
              const Value& v = row[left_side ? l : r];
              if (v.is_null()) return std::nullopt;
              key.push_back(v);
            }
            return key;
          };
          std::map<Row, std::vector<const std::pair<const Row, K>*>> buckets;
          for (const auto& entry : right.rows) {
            if (auto key = key_of(entry.first, false)) {
              buckets[*key].push_back(&entry);
            }
          }
          for (const auto& [lrow, lann] : left.rows) {
            std::optional<Row> key = key_of(lrow, true);
            if (!key.has_value()) continue;
            auto bucket = buckets.find(*key);
            if (bucket == buckets.end()) continue;
            for (const auto* match : bucket->second) {
              Row joined = lrow;
              joined.insert(joined.end(), match->first.begin(),
                            match->first.end());
              out.Add(std::move(joined), lann * match->second);
            }
          }
        }
        return out;
      },
      expr.node);
}

template <typename K>
using Group = std::vector<const std::pair<const Row, K>*>;

template <typename K>
std::map<Row, Group<K>> GroupRows(const KRelation<K>& in,
                                  const AggregateExpr& agg) {
  std::vector<size_t> key_indices;
  for (const std::string& name : agg.group_by) {
    key_indices.push_back(in.IndexOf(name));
  }
  std::map<Row, Group<K>> groups;
  for (const auto& entry : in.rows) {
    Row key;
    for (size_t i : key_indices) key.push_back(entry.first[i]);
    groups[std::move(key)].push_back(&entry);
  }
  return groups;
}

Value TermValue(const AggregateExpr& agg, const Row& row,
                size_t target_index) {
  if (agg.fn == AggFn::kCount) return Value::Num(Decimal::FromInt(1));
  return row[target_index];
}

template <typename K>
size_t TargetIndex(const KRelation<K>& in, const AggregateExpr& agg) {
  return agg.target.has_value() ? in.IndexOf(*agg.target) : 0;
}

template <typename K>
Row GroupOutput(const Row& key, const Group<K>& members,
                const AggregateExpr& agg, size_t target_index) {
  std::vector<Value> values;
  for (const auto* entry : members) {
    values.push_back(TermValue(agg, entry->first, target_index));
  }
  Row out = key;
  // Validated input: the target is numeric, so this cannot fail.
  out.push_back(AggregateValues(agg.fn, values).value_or(Value::Null()));
  return out;
}

std::vector<ResultTuple> EvaluateWhere(const Database& db, const Expr& expr) {
  std::vector<ResultTuple> tuples;
  if (const auto* agg = expr.As<AggregateExpr>()) {
    KRelation<Presence> in = EvalSpj<Presence>(db, *agg->input);
    const size_t target = TargetIndex(in, *agg);
    for (const auto& [key, members] : GroupRows(in, *agg)) {
      tuples.emplace_back().values = GroupOutput(key, members, *agg, target);
    }
    return tuples;
  }
  for (const auto& [row, ann] : EvalSpj<Presence>(db, expr).rows) {
    tuples.emplace_back().values = row;
  }
  return tuples;
}

std::vector<ResultTuple> EvaluateWhy(const Database& db, const Expr& expr) {
  std::vector<ResultTuple> tuples;
  if (const auto* agg = expr.As<AggregateExpr>()) {
    KRelation<WitnessBasis> in = EvalSpj<WitnessBasis>(db, *agg->input);
    const size_t target = TargetIndex(in, *agg);
    for (const auto& [key, members] : GroupRows(in, *agg)) {
      Witness whole_group;
      for (const auto* entry : members) {
        std::set<TupleId> ids = entry->second.Tuples();
        whole_group.insert(ids.begin(), ids.end());
      }
      ResultTuple t;
      t.values = GroupOutput(key, members, *agg, target);
      t.why = WitnessBasis::FromWitnesses({std::move(whole_group)});
      tuples.push_back(std::move(t));
    }
    return tuples;
  }
  for (const auto& [row, basis] : EvalSpj<WitnessBasis>(db, expr).rows) {
    ResultTuple t;
    t.values = row;
    t.why = basis;
    tuples.push_back(std::move(t));
  }
  return tuples;
}

std::vector<ResultTuple> EvaluateHow(const Database& db, const Expr& expr) {
  std::vector<ResultTuple> tuples = EvaluateWhy(db, expr);
  if (const auto* agg = expr.As<AggregateExpr>()) {
    KRelation<Polynomial> in = EvalSpj<Polynomial>(db, *agg->input);
    const size_t target = TargetIndex(in, *agg);
    size_t i = 0;
    for (const auto& [key, members] : GroupRows(in, *agg)) {
      AggExpr agg_expr{agg->fn, {}};
      for (const auto* entry : members) {
        Value v = TermValue(*agg, entry->first, target);
        if (v.is_null()) continue;
        agg_expr.terms.push_back({entry->second, std::move(v)});
      }
      std::sort(agg_expr.terms.begin(), agg_expr.terms.end(),
                [](const AggTerm& a, const AggTerm& b) {
                  if (a.annotation != b.annotation) {
                    return a.annotation < b.annotation;
                  }
                  return a.value < b.value;
                });
      tuples[i++].aggregation = std::move(agg_expr);
    }
    return tuples;
  }
  size_t i = 0;
  for (const auto& [row, poly] : EvalSpj<Polynomial>(db, expr).rows) {
    tuples[i++].how = poly;
  }
  return tuples;
}

}  // namespace

AnnotatedResult Evaluate(const Database& db, const TypedQuery& query,
                         ProvenanceLevel level) {
  AnnotatedResult result;
  result.level = level;
  result.query = query.expr;
  result.schema = query.output;
  result.where = WhereOfAst(query);
  switch (level) {
    case ProvenanceLevel::kWhere:
      result.tuples = EvaluateWhere(db, query.expr);
      break;
    case ProvenanceLevel::kWhy:
      result.tuples = EvaluateWhy(db, query.expr);
      break;
    case ProvenanceLevel::kHow:
      result.tuples = EvaluateHow(db, query.expr);
      break;
  }
  return result;
}

}  // namespace prov
