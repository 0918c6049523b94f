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

#include "prov/relation.h"

#include <charconv>
#include <set>

#include "absl/strings/str_cat.h"
#include "prov/status.h"

namespace prov {

std::optional<size_t> Schema::IndexOf(absl::string_view attribute) const {
  for (size_t i = 0; i < attributes.size(); ++i) {
    if (attributes[i].name == attribute) return i;
  }
  return std::nullopt;
}

absl::StatusOr<Catalog> Catalog::Create(std::vector<Schema> schemas) {
  std::set<std::string> relations;
  for (const Schema& schema : schemas) {
    if (!relations.insert(schema.relation).second) {
      return MakeError(absl::StatusCode::kInvalidArgument,
                       error_kind::kDuplicateName,
                       absl::StrCat("relation '", schema.relation,
                                    "' declared twice"));
    }
    std::set<std::string> names;
    for (const Attribute& attr : schema.attributes) {
      if (!names.insert(attr.name).second) {
        return MakeError(absl::StatusCode::kInvalidArgument,
                         error_kind::kDuplicateName,
                         absl::StrCat("attribute '", attr.name,
                                      "' declared twice in ", schema.relation));
      }
    }
  }
  Catalog catalog;
  catalog.schemas_ = std::move(schemas);
  return catalog;
}

const Schema* Catalog::Find(absl::string_view relation) const {
  for (const Schema& schema : schemas_) {
    if (schema.relation == relation) return &schema;
  }
  return nullptr;
}

std::string TupleId::ToString() const {
  return absl::StrCat(relation, "/", ordinal);
}

absl::StatusOr<TupleId> TupleId::Parse(absl::string_view text) {
  const size_t slash = text.rfind('/');
  auto fail = [&]() {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     error_kind::kMalformedDocument,
                     absl::StrCat("bad tuple id '", text, "'"));
  };
  if (slash == absl::string_view::npos || slash == 0 ||
      slash + 1 == text.size()) {
    return fail();
  }
  uint32_t ordinal = 0;
  const char* first = text.data() + slash + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, ordinal);
  if (ec != std::errc() || ptr != last) return fail();
  return TupleId{std::string(text.substr(0, slash)), ordinal};
}

absl::Status Relation::Validate() const {
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != schema.arity()) {
      return MakeError(absl::StatusCode::kInvalidArgument,
                       error_kind::kArityMismatch,
                       absl::StrCat(schema.relation, " row ", i, " has ",
                                    rows[i].size(), " values, expected ",
                                    schema.arity()));
    }
    for (size_t c = 0; c < rows[i].size(); ++c) {
      if (!rows[i][c].ConformsTo(schema.attributes[c].type)) {
        return MakeError(absl::StatusCode::kInvalidArgument,
                         error_kind::kTypeParseError,
                         absl::StrCat(schema.relation, " row ", i, " column ",
                                      schema.attributes[c].name,
                                      " does not conform to type ",
                                      AttributeTypeName(
                                          schema.attributes[c].type)));
      }
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<Database> Database::Create(std::vector<Relation> relations) {
  Database db;
  for (Relation& rel : relations) {
    PROV_RETURN_IF_ERROR(rel.Validate());
    std::string name = rel.schema.relation;
    if (!db.relations_.emplace(name, std::move(rel)).second) {
      return MakeError(absl::StatusCode::kInvalidArgument,
                       error_kind::kDuplicateName,
                       absl::StrCat("relation '", name, "' given twice"));
    }
  }
  return db;
}

const Relation* Database::Find(absl::string_view relation) const {
  auto it = relations_.find(relation);
  return it == relations_.end() ? nullptr : &it->second;
}

const Row* Database::Lookup(const TupleId& id) const {
  const Relation* rel = Find(id.relation);
  if (rel == nullptr || id.ordinal >= rel->rows.size()) return nullptr;
  return &rel->rows[id.ordinal];
}

Catalog Database::catalog() const {
  std::vector<Schema> schemas;
  for (const auto& [name, rel] : relations_) schemas.push_back(rel.schema);
  return *Catalog::Create(std::move(schemas));
}

absl::StatusOr<Row> ProjectTuple(const Row& row, const Schema& schema,
                                 std::span<const std::string> attributes) {
  Row out;
  out.reserve(attributes.size());
  for (const std::string& attr : attributes) {
    std::optional<size_t> index = schema.IndexOf(attr);
    if (!index.has_value()) {
      return MakeError(absl::StatusCode::kInvalidArgument,
                       error_kind::kUnknownAttribute,
                       absl::StrCat("no attribute '", attr, "' in ",
                                    schema.relation));
    }
    out.push_back(row[*index]);
  }
  return out;
}

}  // namespace prov
