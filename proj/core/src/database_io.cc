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

#include "prov/database_io.h"

#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "nlohmann/json.hpp"
#include "prov/status.h"

namespace prov {
namespace {

using json = nlohmann::ordered_json;

absl::Status Malformed(absl::string_view what) {
  return MakeError(absl::StatusCode::kInvalidArgument,
                   error_kind::kMalformedDocument, what);
}

std::vector<absl::string_view> SplitLines(absl::string_view text) {
  std::vector<absl::string_view> lines = absl::StrSplit(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (absl::string_view& line : lines) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  }
  return lines;
}

}  // namespace

absl::StatusOr<Catalog> ParseCatalogJson(absl::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object() ||
      !doc.contains("relations") || !doc["relations"].is_array()) {
    return Malformed("catalog must be an object with a 'relations' array");
  }
  std::vector<Schema> schemas;
  for (const json& rel : doc["relations"]) {
    if (!rel.is_object() || !rel.contains("name") ||
        !rel["name"].is_string() || !rel.contains("attributes") ||
        !rel["attributes"].is_array()) {
      return Malformed("each relation needs 'name' and 'attributes'");
    }
    Schema schema;
    schema.relation = rel["name"].get<std::string>();
    for (const json& attr : rel["attributes"]) {
      if (!attr.is_object() || !attr.contains("name") ||
          !attr["name"].is_string() || !attr.contains("type") ||
          !attr["type"].is_string()) {
        return Malformed("each attribute needs 'name' and 'type'");
      }
      const std::string type = attr["type"].get<std::string>();
      AttributeType parsed;
      if (type == "number") {
        parsed = AttributeType::kNumber;
      } else if (type == "text") {
        parsed = AttributeType::kText;
      } else {
        return Malformed(absl::StrCat("unknown attribute type '", type, "'"));
      }
      schema.attributes.push_back({attr["name"].get<std::string>(), parsed});
    }
    schemas.push_back(std::move(schema));
  }
  return Catalog::Create(std::move(schemas));
}

std::string CatalogToJson(const Catalog& catalog) {
  json relations = json::array();
  for (const Schema& schema : catalog.schemas()) {
    json attrs = json::array();
    for (const Attribute& attr : schema.attributes) {
      attrs.push_back({{"name", attr.name},
                       {"type", std::string(AttributeTypeName(attr.type))}});
    }
    relations.push_back({{"name", schema.relation}, {"attributes", attrs}});
  }
  return json{{"relations", relations}}.dump(2) + "\n";
}

absl::StatusOr<Catalog> LoadCatalog(const std::filesystem::path& path) {
  PROV_ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  return ParseCatalogJson(text);
}

absl::StatusOr<Relation> ParseCsv(absl::string_view text, const Schema& schema) {
  std::vector<absl::string_view> lines = SplitLines(text);
  std::vector<std::string> expected;
  for (const Attribute& attr : schema.attributes) expected.push_back(attr.name);
  if (lines.empty() ||
      std::vector<std::string>(absl::StrSplit(lines[0], ',')) != expected) {
    return MakeError(
        absl::StatusCode::kInvalidArgument, error_kind::kHeaderMismatch,
        absl::StrCat(schema.relation, ".csv: expected header '",
                     absl::StrJoin(expected, ","), "', found '",
                     lines.empty() ? "" : lines[0], "'"));
  }
  Relation rel{schema, {}};
  for (size_t l = 1; l < lines.size(); ++l) {
    std::vector<absl::string_view> fields = absl::StrSplit(lines[l], ',');
    if (fields.size() != schema.arity()) {
      return MakeError(absl::StatusCode::kInvalidArgument,
                       error_kind::kArityMismatch,
                       absl::StrCat(schema.relation, ".csv:", l + 1, ": ",
                                    fields.size(), " fields, expected ",
                                    schema.arity()));
    }
    Row row;
    for (size_t c = 0; c < fields.size(); ++c) {
      if (fields[c].empty()) {
        row.push_back(Value::Null());
      } else if (schema.attributes[c].type == AttributeType::kText) {
        row.push_back(Value::Txt(std::string(fields[c])));
      } else {
        absl::StatusOr<Decimal> d = Decimal::Parse(fields[c]);
        if (!d.ok()) {
          return MakeError(
              absl::StatusCode::kInvalidArgument, error_kind::kTypeParseError,
              absl::StrCat(schema.relation, ".csv:", l + 1, ":", c + 1,
                           ": '", fields[c], "' is not a number (attribute ",
                           schema.attributes[c].name, ")"));
        }
        row.push_back(Value::Num(*d));
      }
    }
    rel.rows.push_back(std::move(row));
  }
  return rel;
}

std::string FormatCsv(const Relation& relation) {
  std::string out;
  std::vector<std::string> header;
  for (const Attribute& attr : relation.schema.attributes) {
    header.push_back(attr.name);
  }
  absl::StrAppend(&out, absl::StrJoin(header, ","), "\n");
  for (const Row& row : relation.rows) {
    absl::StrAppend(&out,
                    absl::StrJoin(row, ",",
                                  [](std::string* s, const Value& v) {
                                    s->append(v.ToString());
                                  }),
                    "\n");
  }
  return out;
}

absl::StatusOr<Database> LoadDatabase(const std::filesystem::path& dir,
                                      const Catalog& catalog) {
  std::vector<Relation> relations;
  for (const Schema& schema : catalog.schemas()) {
    const std::filesystem::path file = dir / (schema.relation + ".csv");
    std::error_code ec;
    if (!std::filesystem::is_regular_file(file, ec)) {
      return MakeError(absl::StatusCode::kNotFound, error_kind::kMissingFile,
                       absl::StrCat("no such file: ", file.string()));
    }
    PROV_ASSIGN_OR_RETURN(std::string text, ReadFile(file));
    PROV_ASSIGN_OR_RETURN(Relation rel, ParseCsv(text, schema));
    relations.push_back(std::move(rel));
  }
  return Database::Create(std::move(relations));
}

absl::Status WriteDatabase(const Database& db,
                           const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return MakeError(absl::StatusCode::kUnavailable, error_kind::kIoError,
                     absl::StrCat("cannot create ", dir.string(), ": ",
                                  ec.message()));
  }
  for (const auto& [name, rel] : db.relations()) {
    PROV_RETURN_IF_ERROR(WriteFile(dir / (name + ".csv"), FormatCsv(rel)));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return MakeError(absl::StatusCode::kNotFound, error_kind::kMissingFile,
                     absl::StrCat("cannot open ", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteFile(const std::filesystem::path& path,
                       absl::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return MakeError(absl::StatusCode::kUnavailable, error_kind::kIoError,
                     absl::StrCat("cannot write ", path.string()));
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) {
    return MakeError(absl::StatusCode::kUnavailable, error_kind::kIoError,
                     absl::StrCat("write failed: ", path.string()));
  }
  return absl::OkStatus();
}

}  // namespace prov
