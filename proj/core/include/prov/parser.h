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

#ifndef PROV_PARSER_H_
#define PROV_PARSER_H_

#include "absl/strings/string_view.h"

#include "absl/status/statusor.h"
#include "prov/expr.h"

namespace prov {

// Parses the relational-algebra query language:
//
//   expr    := IDENT
//            | "sigma" "[" pred "]" "(" expr ")"
//            | "pi" "[" IDENT ("," IDENT)* "]" "(" expr ")"
//            | "join" "[" eq ("," eq)* "]" "(" expr "," expr ")"
//            | "agg" "[" [IDENT ("," IDENT)*] ";" FN "(" [IDENT] ")" "]"
//                  "(" expr ")"
//   pred    := cmp ("and" cmp)*
//   cmp     := IDENT OP (IDENT | NUMBER | 'text')
//   eq      := IDENT "=" IDENT            (optionally parenthesized)
//   OP      := = | != | < | > | <= | >=
//   FN      := avg | sum | count | min | max
//
// sigma, pi, join, agg and `and` are reserved. No schema knowledge is used;
// see Validate. Errors are SyntaxError with "line:column" and the expected
// tokens in the message.
absl::StatusOr<Expr> Parse(absl::string_view text);

}  // namespace prov

#endif  // PROV_PARSER_H_
