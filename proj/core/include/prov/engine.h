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

#ifndef PROV_ENGINE_H_
#define PROV_ENGINE_H_

#include <optional>
#include <set>
#include <vector>

#include "prov/agg_expr.h"
#include "prov/polynomial.h"
#include "prov/provenance.h"
#include "prov/relation.h"
#include "prov/validate.h"
#include "prov/witness.h"

namespace prov {

struct ResultTuple {
  Row values;
  // Present at levels why and how.
  std::optional<WitnessBasis> why;
  // At level how: `how` for select-project-join queries, `aggregation` for
  // aggregate queries.
  std::optional<Polynomial> how;
  std::optional<AggExpr> aggregation;

  friend bool operator==(const ResultTuple&, const ResultTuple&) = default;
};

// A query result together with the provenance recorded at `level`.
struct AnnotatedResult {
  ProvenanceLevel level = ProvenanceLevel::kWhere;
  Expr query;
  Schema schema;
  WhereProvenance where;
  std::vector<ResultTuple> tuples;
  // Source attributes whose values in this result were replaced by
  // generalization labels.
  std::set<SourceAttribute> generalized;

  const AggregateExpr* aggregate() const { return query.As<AggregateExpr>(); }

  friend bool operator==(const AnnotatedResult&, const AnnotatedResult&) =
      default;
};

// Evaluates `query` under set semantics, propagating provenance:
//   select keeps annotations, project and duplicate elimination add them,
//   join multiplies them, and a root aggregate collects each group into an
//   AggExpr (how) or a single witness holding the whole group (why).
// Result tuples are ordered by their values. Witness bases at level how are
// computed in the witness semiring directly, not derived from polynomials.
AnnotatedResult Evaluate(const Database& db, const TypedQuery& query,
                         ProvenanceLevel level);

}  // namespace prov

#endif  // PROV_ENGINE_H_
