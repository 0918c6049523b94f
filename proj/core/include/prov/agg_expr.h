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

#ifndef PROV_AGG_EXPR_H_
#define PROV_AGG_EXPR_H_

#include <set>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "prov/expr.h"
#include "prov/polynomial.h"
#include "prov/value.h"

namespace prov {

struct AggTerm {
  Polynomial annotation;
  Value value;
  friend bool operator==(const AggTerm&, const AggTerm&) = default;
};

// Unevaluated aggregation: fn applied to the formal sum of
// (annotation, value) terms. Terms are ordered by annotation.
struct AggExpr {
  AggFn fn = AggFn::kCount;
  std::vector<AggTerm> terms;

  // Aggregate of the term values. Fails if a value is not a number, which
  // happens once terms have been generalized to labels.
  absl::StatusOr<Value> Evaluate() const;

  std::set<TupleId> Variables() const;

  // `AVG[(t[Grades/0],1.0),(t[Grades/1],1.3)]`. Text values are
  // double-quoted with '"' and '\' escaped.
  std::string ToString() const;
  static absl::StatusOr<AggExpr> Parse(absl::string_view text);

  friend bool operator==(const AggExpr&, const AggExpr&) = default;
};

// AVG/SUM/MIN/MAX over the non-null numbers in `values` (Null if there are
// none; AVG rounds half away from zero at four places). COUNT counts every
// entry.
absl::StatusOr<Value> AggregateValues(AggFn fn, std::span<const Value> values);

}  // namespace prov

#endif  // PROV_AGG_EXPR_H_
