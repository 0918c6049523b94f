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

#include "prov/validate.h"

#include <set>

#include "absl/strings/str_cat.h"
#include "prov/status.h"

namespace prov {
namespace {

constexpr absl::string_view kResultName = "result";

absl::Status UnknownAttribute(absl::string_view attr, const Schema& schema) {
  return MakeError(absl::StatusCode::kInvalidArgument,
                   error_kind::kUnknownAttribute,
                   absl::StrCat("no attribute '", attr, "' in input of ",
                                schema.relation));
}

absl::StatusOr<const Attribute*> Resolve(absl::string_view attr,
                                         const Schema& schema) {
  std::optional<size_t> index = schema.IndexOf(attr);
  if (!index.has_value()) return UnknownAttribute(attr, schema);
  return &schema.attributes[*index];
}

absl::Status TypeMismatch(absl::string_view what) {
  return MakeError(absl::StatusCode::kInvalidArgument, error_kind::kTypeMismatch,
                   what);
}

absl::Status CheckDistinct(const std::vector<Attribute>& attrs) {
  std::set<absl::string_view> seen;
  for (const Attribute& attr : attrs) {
    if (!seen.insert(attr.name).second) {
      return MakeError(absl::StatusCode::kInvalidArgument,
                       error_kind::kDuplicateOutputAttribute,
                       absl::StrCat("attribute '", attr.name,
                                    "' would appear twice in the output"));
    }
  }
  return absl::OkStatus();
}

absl::Status CheckPredicate(const Predicate& pred, const Schema& schema) {
  for (const Comparison& cmp : pred.conjuncts) {
    PROV_ASSIGN_OR_RETURN(const Attribute* lhs, Resolve(cmp.lhs, schema));
    if (const auto* attr = std::get_if<AttrRef>(&cmp.rhs)) {
      PROV_ASSIGN_OR_RETURN(const Attribute* rhs, Resolve(attr->name, schema));
      if (lhs->type != rhs->type) {
        return TypeMismatch(absl::StrCat("cannot compare ", lhs->name, " (",
                                         AttributeTypeName(lhs->type),
                                         ") with ", rhs->name, " (",
                                         AttributeTypeName(rhs->type), ")"));
      }
    } else {
      const Value& constant = std::get<Value>(cmp.rhs);
      if (constant.is_null() || !constant.ConformsTo(lhs->type)) {
        return TypeMismatch(absl::StrCat("cannot compare ", lhs->name, " (",
                                         AttributeTypeName(lhs->type),
                                         ") with constant ",
                                         constant.ToString()));
      }
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<Schema> SchemaOf(const Expr& expr, const Catalog& catalog,
                                bool is_root, bool enforce_placement) {
  return std::visit(
      [&](const auto& node) -> absl::StatusOr<Schema> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ScanExpr>) {
          const Schema* schema = catalog.Find(node.relation);
          if (schema == nullptr) {
            return MakeError(absl::StatusCode::kInvalidArgument,
                             error_kind::kUnknownRelation,
                             absl::StrCat("no relation '", node.relation, "'"));
          }
          return *schema;
        } else if constexpr (std::is_same_v<T, SelectExpr>) {
          PROV_ASSIGN_OR_RETURN(
              Schema in, SchemaOf(*node.input, catalog, false, enforce_placement));
          PROV_RETURN_IF_ERROR(CheckPredicate(node.predicate, in));
          return in;
        } else if constexpr (std::is_same_v<T, ProjectExpr>) {
          PROV_ASSIGN_OR_RETURN(
              Schema in, SchemaOf(*node.input, catalog, false, enforce_placement));
          Schema out{std::string(kResultName), {}};
          for (const std::string& name : node.attributes) {
            PROV_ASSIGN_OR_RETURN(const Attribute* attr, Resolve(name, in));
            out.attributes.push_back(*attr);
          }
          PROV_RETURN_IF_ERROR(CheckDistinct(out.attributes));
          return out;
        } else if constexpr (std::is_same_v<T, JoinExpr>) {
          PROV_ASSIGN_OR_RETURN(
              Schema left, SchemaOf(*node.left, catalog, false, enforce_placement));
          PROV_ASSIGN_OR_RETURN(Schema right, SchemaOf(*node.right, catalog,
                                                       false, enforce_placement));
          for (const auto& [l, r] : node.on) {
            PROV_ASSIGN_OR_RETURN(const Attribute* la, Resolve(l, left));
            PROV_ASSIGN_OR_RETURN(const Attribute* ra, Resolve(r, right));
            if (la->type != ra->type) {
              return TypeMismatch(absl::StrCat("join on ", l, " = ", r,
                                               " compares different types"));
            }
          }
          Schema out{std::string(kResultName), left.attributes};
          out.attributes.insert(out.attributes.end(), right.attributes.begin(),
                                right.attributes.end());
          PROV_RETURN_IF_ERROR(CheckDistinct(out.attributes));
          return out;
        } else {
          if (enforce_placement && !is_root) {
            return MakeError(absl::StatusCode::kInvalidArgument,
                             error_kind::kInvalidQuery,
                             "an aggregate may only appear at the query root");
          }
          PROV_ASSIGN_OR_RETURN(
              Schema in, SchemaOf(*node.input, catalog, false, enforce_placement));
          Schema out{std::string(kResultName), {}};
          for (const std::string& name : node.group_by) {
            PROV_ASSIGN_OR_RETURN(const Attribute* attr, Resolve(name, in));
            out.attributes.push_back(*attr);
          }
          if (node.fn == AggFn::kCount) {
            if (node.target.has_value()) {
              return MakeError(absl::StatusCode::kInvalidArgument,
                               error_kind::kInvalidQuery,
                               "count() takes no argument");
            }
          } else {
            if (!node.target.has_value()) {
              return MakeError(absl::StatusCode::kInvalidArgument,
                               error_kind::kInvalidQuery,
                               absl::StrCat(AggFnName(node.fn),
                                            "() needs a target attribute"));
            }
            PROV_ASSIGN_OR_RETURN(const Attribute* target,
                                  Resolve(*node.target, in));
            if (target->type != AttributeType::kNumber) {
              return TypeMismatch(absl::StrCat(AggFnName(node.fn),
                                               " over non-number attribute ",
                                               target->name));
            }
          }
          out.attributes.push_back(
              {AggregateOutputName(node.fn, node.target), AttributeType::kNumber});
          PROV_RETURN_IF_ERROR(CheckDistinct(out.attributes));
          return out;
        }
      },
      expr.node);
}

}  // namespace

std::string AggregateOutputName(AggFn fn,
                                const std::optional<std::string>& target) {
  if (fn == AggFn::kCount || !target.has_value()) return "count";
  return absl::StrCat(AggFnName(fn), "_", *target);
}

absl::StatusOr<Schema> OutputSchema(const Expr& expr, const Catalog& catalog) {
  return SchemaOf(expr, catalog, /*is_root=*/true, /*enforce_placement=*/false);
}

absl::StatusOr<TypedQuery> Validate(const Expr& expr, const Catalog& catalog) {
  PROV_ASSIGN_OR_RETURN(Schema output, SchemaOf(expr, catalog, true, true));
  if (output.relation != kResultName) output.relation = std::string(kResultName);
  return TypedQuery{expr, std::move(output), catalog};
}

}  // namespace prov
