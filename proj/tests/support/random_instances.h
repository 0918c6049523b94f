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

// Random databases, queries and polynomials for property tests.

#ifndef PROV_TESTS_SUPPORT_RANDOM_INSTANCES_H_
#define PROV_TESTS_SUPPORT_RANDOM_INSTANCES_H_

#include <cstddef>
#include <random>
#include <vector>

#include "prov/decimal.h"
#include "prov/expr.h"
#include "prov/polynomial.h"
#include "prov/relation.h"

namespace prov::testing {

using Rng = std::mt19937_64;

// R(A number, B text), S(C number, D number), T(E text, F number). Attribute
// names are globally unique so any join of distinct relations is valid.
Catalog SmallCatalog();

// Values are drawn from {1, 2, 3}, {'x', 'y'} and occasionally Null.
// Each relation gets at most `max_per_relation` tuples and the database at
// most `max_total`.
Database RandomDatabase(Rng& rng, const Catalog& catalog,
                        size_t max_per_relation, size_t max_total);

// A valid select-project-join query over `catalog` without self-joins.
Expr RandomSpjQuery(Rng& rng, const Catalog& catalog);

// A valid query whose root is an aggregate over a random SPJ input.
Expr RandomAggregateQuery(Rng& rng, const Catalog& catalog);

// A syntactically well-formed AST, not necessarily valid against any catalog.
Expr RandomAst(Rng& rng, int max_depth);

// Sum of up to four terms over up to four variables, coefficients 1..3.
Polynomial RandomPolynomial(Rng& rng);

// 1.0, 1.3, 1.7, 2.0, 2.3, 2.7, 3.0, 3.3, 3.7, 4.0, 5.0.
std::vector<Decimal> GradeDomain();

}  // namespace prov::testing

#endif  // PROV_TESTS_SUPPORT_RANDOM_INSTANCES_H_
