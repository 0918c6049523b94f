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

#include "prov/expr.h"

#include <map>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace prov {
namespace {

std::string PrintConstant(const Value& v) {
  if (v.is_text()) return absl::StrCat("'", v.text(), "'");
  return v.ToString();
}

void CountScans(const Expr& expr, std::map<std::string, int>& counts) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ScanExpr>) {
          ++counts[node.relation];
        } else if constexpr (std::is_same_v<T, JoinExpr>) {
          CountScans(*node.left, counts);
          CountScans(*node.right, counts);
        } else {
          CountScans(*node.input, counts);
        }
      },
      expr.node);
}

}  // namespace

absl::string_view CompareOpSymbol(CompareOp op) {
  switch (op) {
    case CompareOp::kEq: return "=";
    case CompareOp::kNe: return "!=";
    case CompareOp::kLt: return "<";
    case CompareOp::kGt: return ">";
    case CompareOp::kLe: return "<=";
    case CompareOp::kGe: return ">=";
  }
  return "?";
}

absl::string_view AggFnName(AggFn fn) {
  switch (fn) {
    case AggFn::kAvg: return "avg";
    case AggFn::kSum: return "sum";
    case AggFn::kCount: return "count";
    case AggFn::kMin: return "min";
    case AggFn::kMax: return "max";
  }
  return "?";
}

absl::string_view AggFnTag(AggFn fn) {
  switch (fn) {
    case AggFn::kAvg: return "AVG";
    case AggFn::kSum: return "SUM";
    case AggFn::kCount: return "COUNT";
    case AggFn::kMin: return "MIN";
    case AggFn::kMax: return "MAX";
  }
  return "?";
}

std::optional<AggFn> AggFnFromName(absl::string_view name) {
  for (AggFn fn : {AggFn::kAvg, AggFn::kSum, AggFn::kCount, AggFn::kMin,
                   AggFn::kMax}) {
    if (name == AggFnName(fn) || name == AggFnTag(fn)) return fn;
  }
  return std::nullopt;
}

Expr Scan(std::string relation) {
  return Expr{ScanExpr{std::move(relation)}};
}
Expr Select(Predicate predicate, Expr input) {
  return Expr{SelectExpr{std::move(predicate), std::move(input)}};
}
Expr Project(std::vector<std::string> attributes, Expr input) {
  return Expr{ProjectExpr{std::move(attributes), std::move(input)}};
}
Expr Join(std::vector<std::pair<std::string, std::string>> on, Expr left,
          Expr right) {
  return Expr{JoinExpr{std::move(on), std::move(left), std::move(right)}};
}
Expr Aggregate(std::vector<std::string> group_by, AggFn fn,
               std::optional<std::string> target, Expr input) {
  return Expr{AggregateExpr{std::move(group_by), fn, std::move(target),
                            std::move(input)}};
}

std::string PrintPredicate(const Predicate& predicate) {
  return absl::StrJoin(
      predicate.conjuncts, " and ", [](std::string* out, const Comparison& c) {
        absl::StrAppend(out, c.lhs, " ", CompareOpSymbol(c.op), " ");
        if (const auto* attr = std::get_if<AttrRef>(&c.rhs)) {
          out->append(attr->name);
        } else {
          out->append(PrintConstant(std::get<Value>(c.rhs)));
        }
      });
}

std::string PrintExpr(const Expr& expr) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ScanExpr>) {
          return node.relation;
        } else if constexpr (std::is_same_v<T, SelectExpr>) {
          return absl::StrCat("sigma[", PrintPredicate(node.predicate), "](",
                              PrintExpr(*node.input), ")");
        } else if constexpr (std::is_same_v<T, ProjectExpr>) {
          return absl::StrCat("pi[", absl::StrJoin(node.attributes, ", "),
                              "](", PrintExpr(*node.input), ")");
        } else if constexpr (std::is_same_v<T, JoinExpr>) {
          return absl::StrCat(
              "join[",
              absl::StrJoin(node.on, ", ",
                            [](std::string* out, const auto& eq) {
                              absl::StrAppend(out, eq.first, " = ", eq.second);
                            }),
              "](", PrintExpr(*node.left), ", ", PrintExpr(*node.right), ")");
        } else {
          return absl::StrCat("agg[", absl::StrJoin(node.group_by, ", "), "; ",
                              AggFnName(node.fn), "(", node.target.value_or(""),
                              ")](", PrintExpr(*node.input), ")");
        }
      },
      expr.node);
}

std::vector<std::pair<std::string, int>> ScanCounts(const Expr& expr) {
  std::map<std::string, int> counts;
  CountScans(expr, counts);
  return {counts.begin(), counts.end()};
}

int ScanCount(const Expr& expr, absl::string_view relation) {
  for (const auto& [name, count] : ScanCounts(expr)) {
    if (name == relation) return count;
  }
  return 0;
}

}  // namespace prov
