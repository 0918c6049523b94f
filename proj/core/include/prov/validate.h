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

#ifndef PROV_VALIDATE_H_
#define PROV_VALIDATE_H_

#include <string>

#include "absl/status/statusor.h"
#include "prov/expr.h"
#include "prov/relation.h"

namespace prov {

// A query whose attribute references all resolve against `catalog`.
struct TypedQuery {
  Expr expr;
  Schema output;
  Catalog catalog;

  const AggregateExpr* aggregate() const { return expr.As<AggregateExpr>(); }
};

// Name of the aggregate output column: "avg_Grade", or "count" for COUNT.
std::string AggregateOutputName(AggFn fn, const std::optional<std::string>& target);

// Output schema of any subexpression. Does not enforce aggregate placement.
//
// Errors: UnknownRelation, UnknownAttribute, TypeMismatch,
// DuplicateOutputAttribute, InvalidQuery.
absl::StatusOr<Schema> OutputSchema(const Expr& expr, const Catalog& catalog);

// Binds and type-checks `expr`. In addition to OutputSchema's checks, at most
// one aggregate is allowed and it must be the root.
absl::StatusOr<TypedQuery> Validate(const Expr& expr, const Catalog& catalog);

}  // namespace prov

#endif  // PROV_VALIDATE_H_
