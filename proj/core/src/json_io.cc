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

#include "prov/json_io.h"

#include "absl/strings/str_cat.h"
#include "nlohmann/json.hpp"
#include "prov/parser.h"
#include "prov/status.h"

namespace prov {
namespace {

using json = nlohmann::ordered_json;

absl::Status Malformed(absl::string_view what) {
  return MakeError(absl::StatusCode::kInvalidArgument,
                   error_kind::kMalformedDocument, what);
}

absl::StatusOr<json> ParseDocument(absl::string_view text, absl::string_view kind) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    return Malformed(absl::StrCat(kind, " is not a JSON object"));
  }
  return doc;
}

absl::StatusOr<const json*> Field(const json& obj, absl::string_view key,
                                  json::value_t type) {
  auto it = obj.find(std::string(key));
  if (it == obj.end() || it->type() != type) {
    return Malformed(absl::StrCat("missing or mistyped field '", key, "'"));
  }
  return &*it;
}

json ValueToJson(const Value& v) {
  if (v.is_null()) return nullptr;
  if (v.is_number()) return v.number().ToDouble();
  return v.text();
}

absl::StatusOr<Value> ValueFromJson(const json& j) {
  if (j.is_null()) return Value::Null();
  if (j.is_number()) return Value::Num(Decimal::FromDouble(j.get<double>()));
  if (j.is_string()) return Value::Txt(j.get<std::string>());
  return Malformed("values must be null, numbers or strings");
}

json AttributesToJson(const std::vector<Attribute>& attrs) {
  json out = json::array();
  for (const Attribute& a : attrs) {
    out.push_back({{"name", a.name},
                   {"type", std::string(AttributeTypeName(a.type))}});
  }
  return out;
}

absl::StatusOr<std::vector<Attribute>> AttributesFromJson(const json& j) {
  if (!j.is_array()) return Malformed("attributes must be an array");
  std::vector<Attribute> out;
  for (const json& a : j) {
    if (!a.is_object() || !a.contains("name") || !a.contains("type") ||
        !a["name"].is_string() || !a["type"].is_string()) {
      return Malformed("attribute needs 'name' and 'type'");
    }
    const std::string type = a["type"].get<std::string>();
    if (type != "number" && type != "text") {
      return Malformed(absl::StrCat("unknown type '", type, "'"));
    }
    out.push_back({a["name"].get<std::string>(),
                   type == "number" ? AttributeType::kNumber
                                    : AttributeType::kText});
  }
  return out;
}

absl::StatusOr<ProvenanceLevel> LevelFromJson(const json& doc) {
  PROV_ASSIGN_OR_RETURN(const json* level,
                        Field(doc, "level", json::value_t::string));
  std::optional<ProvenanceLevel> parsed = ParseLevel(level->get<std::string>());
  if (!parsed.has_value()) return Malformed("unknown provenance level");
  return *parsed;
}

absl::StatusOr<std::vector<std::string>> StringArray(const json& j) {
  if (!j.is_array()) return Malformed("expected an array of strings");
  std::vector<std::string> out;
  for (const json& s : j) {
    if (!s.is_string()) return Malformed("expected an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

absl::StatusOr<std::set<SourceAttribute>> SourceAttributes(const json& j) {
  PROV_ASSIGN_OR_RETURN(std::vector<std::string> names, StringArray(j));
  std::set<SourceAttribute> out;
  for (const std::string& name : names) {
    std::optional<SourceAttribute> attr = SourceAttribute::Parse(name);
    if (!attr.has_value()) {
      return Malformed(absl::StrCat("expected Relation.Attribute, got '", name,
                                    "'"));
    }
    out.insert(*attr);
  }
  return out;
}

json SourceAttributesToJson(const std::set<SourceAttribute>& attrs) {
  json out = json::array();
  for (const SourceAttribute& a : attrs) out.push_back(a.ToString());
  return out;
}

json ReportToJsonObject(const DisclosureReport& report) {
  json reasons = json::array();
  for (const std::string& r : report.reasons) reasons.push_back(r);

  json relations = json::array();
  for (const auto& [name, k] : report.k_anonymity) {
    json classes = json::array();
    for (const EquivalenceClass& c : k.classes) {
      classes.push_back({{"key", c.key}, {"size", c.size}});
    }
    relations.push_back({{"relation", name},
                         {"k_min", k.k_min.has_value() ? json(*k.k_min)
                                                       : json("n/a")},
                         {"classes", classes}});
  }

  json groups = json::array();
  for (const Row& key : report.zero_variance_groups) {
    json row = json::array();
    for (const Value& v : key) row.push_back(ValueToJson(v));
    groups.push_back(row);
  }

  json cells = json::array();
  for (const CellClassification& c : report.cells) {
    cells.push_back(
        {{"relation", c.relation},
         {"tuple", c.tuple},
         {"attribute", c.attribute},
         {"origin", c.origin.has_value() ? json(c.origin->ToString())
                                         : json(nullptr)},
         {"class", std::string(CellDisclosureName(c.disclosure))}});
  }

  return {
      {"level", std::string(LevelName(report.level))},
      {"verdict", report.pass ? "PASS" : "FAIL"},
      {"reasons", reasons},
      {"leakage",
       {{"disclosed", report.disclosed},
        {"total", report.sensitive_total},
        {"score", report.leakage()}}},
      {"k_anonymity",
       {{"required", report.required_k},
        {"k_min", report.k_min.has_value() ? json(*report.k_min) : json("n/a")},
        {"relations", relations}}},
      {"zero_variance_groups", groups},
      {"cells", cells},
  };
}

}  // namespace

std::string ResultToJson(const AnnotatedResult& result) {
  json lineage = json::object();
  for (const AttributeLineage& l : result.where.attributes) {
    lineage[l.attribute] = SourceAttributesToJson(l.sources);
  }
  json relations = json::array();
  for (const std::string& r : result.where.relations) relations.push_back(r);

  json tuples = json::array();
  for (const ResultTuple& t : result.tuples) {
    json values = json::array();
    for (const Value& v : t.values) values.push_back(ValueToJson(v));
    json tuple = {{"values", values}};
    if (t.why.has_value()) {
      json witnesses = json::array();
      for (const Witness& w : t.why->witnesses()) {
        json ids = json::array();
        for (const TupleId& id : w) ids.push_back(id.ToString());
        witnesses.push_back(ids);
      }
      tuple["witnesses"] = witnesses;
    }
    if (t.aggregation.has_value()) {
      tuple["how"] = t.aggregation->ToString();
    } else if (t.how.has_value()) {
      tuple["how"] = t.how->ToString();
    }
    tuples.push_back(std::move(tuple));
  }

  json doc = {
      {"query", PrintExpr(result.query)},
      {"level", std::string(LevelName(result.level))},
      {"schema", AttributesToJson(result.schema.attributes)},
      {"where", {{"relations", relations}, {"lineage", lineage}}},
      {"generalized", SourceAttributesToJson(result.generalized)},
      {"tuples", tuples},
  };
  return doc.dump(2) + "\n";
}

absl::StatusOr<AnnotatedResult> ParseResultJson(absl::string_view text) {
  PROV_ASSIGN_OR_RETURN(json doc, ParseDocument(text, "result"));
  AnnotatedResult result;
  PROV_ASSIGN_OR_RETURN(const json* query,
                        Field(doc, "query", json::value_t::string));
  PROV_ASSIGN_OR_RETURN(result.query, Parse(query->get<std::string>()));
  PROV_ASSIGN_OR_RETURN(result.level, LevelFromJson(doc));
  PROV_ASSIGN_OR_RETURN(const json* schema,
                        Field(doc, "schema", json::value_t::array));
  result.schema.relation = "result";
  PROV_ASSIGN_OR_RETURN(result.schema.attributes, AttributesFromJson(*schema));

  PROV_ASSIGN_OR_RETURN(const json* where,
                        Field(doc, "where", json::value_t::object));
  PROV_ASSIGN_OR_RETURN(const json* relations,
                        Field(*where, "relations", json::value_t::array));
  PROV_ASSIGN_OR_RETURN(std::vector<std::string> relation_names,
                        StringArray(*relations));
  result.where.relations = {relation_names.begin(), relation_names.end()};
  PROV_ASSIGN_OR_RETURN(const json* lineage,
                        Field(*where, "lineage", json::value_t::object));
  for (const auto& [attr, sources] : lineage->items()) {
    PROV_ASSIGN_OR_RETURN(std::set<SourceAttribute> parsed,
                          SourceAttributes(sources));
    result.where.attributes.push_back({attr, std::move(parsed)});
  }
  if (doc.contains("generalized")) {
    PROV_ASSIGN_OR_RETURN(result.generalized,
                          SourceAttributes(doc["generalized"]));
  }

  PROV_ASSIGN_OR_RETURN(const json* tuples,
                        Field(doc, "tuples", json::value_t::array));
  const bool is_aggregate = result.aggregate() != nullptr;
  for (const json& t : *tuples) {
    if (!t.is_object()) return Malformed("tuples must be objects");
    PROV_ASSIGN_OR_RETURN(const json* values,
                          Field(t, "values", json::value_t::array));
    ResultTuple tuple;
    for (const json& v : *values) {
      PROV_ASSIGN_OR_RETURN(Value parsed, ValueFromJson(v));
      tuple.values.push_back(std::move(parsed));
    }
    if (tuple.values.size() != result.schema.arity()) {
      return Malformed("tuple arity does not match the schema");
    }
    if (t.contains("witnesses")) {
      if (!t["witnesses"].is_array()) return Malformed("witnesses: array");
      std::vector<Witness> witnesses;
      for (const json& w : t["witnesses"]) {
        PROV_ASSIGN_OR_RETURN(std::vector<std::string> ids, StringArray(w));
        Witness witness;
        for (const std::string& id : ids) {
          PROV_ASSIGN_OR_RETURN(TupleId parsed, TupleId::Parse(id));
          witness.insert(std::move(parsed));
        }
        witnesses.push_back(std::move(witness));
      }
      tuple.why = WitnessBasis::FromWitnesses(std::move(witnesses));
    }
    if (t.contains("how")) {
      if (!t["how"].is_string()) return Malformed("how: string");
      const std::string how = t["how"].get<std::string>();
      if (is_aggregate) {
        PROV_ASSIGN_OR_RETURN(tuple.aggregation, AggExpr::Parse(how));
      } else {
        PROV_ASSIGN_OR_RETURN(tuple.how, Polynomial::Parse(how));
      }
    }
    result.tuples.push_back(std::move(tuple));
  }
  return result;
}

std::string ReconstructionToJson(const ReconstructedDatabase& rec) {
  json relations = json::array();
  for (const ReconstructedRelation& rel : rec.relations) {
    json rows = json::array();
    for (const ReconstructedTuple& t : rel.tuples) {
      json cells = json::array();
      for (const Cell& c : t.cells) {
        json cell = {{"v", ValueToJson(c.value)},
                     {"s", std::string(CellStatusName(c.status))}};
        if (c.status == CellStatus::kGeneralized) cell["label"] = c.label;
        cells.push_back(std::move(cell));
      }
      rows.push_back({{"result_row", t.result_row},
                      {"origin", t.origin.has_value()
                                     ? json(t.origin->ToString())
                                     : json(nullptr)},
                      {"cells", cells}});
    }
    relations.push_back({{"name", rel.schema.relation},
                         {"attributes", AttributesToJson(rel.schema.attributes)},
                         {"rows", rows}});
  }
  json doc = {{"level", std::string(LevelName(rec.level))},
              {"relations", relations}};
  return doc.dump(2) + "\n";
}

absl::StatusOr<ReconstructedDatabase> ParseReconstructionJson(
    absl::string_view text) {
  PROV_ASSIGN_OR_RETURN(json doc, ParseDocument(text, "reconstruction"));
  ReconstructedDatabase rec;
  PROV_ASSIGN_OR_RETURN(rec.level, LevelFromJson(doc));
  PROV_ASSIGN_OR_RETURN(const json* relations,
                        Field(doc, "relations", json::value_t::array));
  for (const json& r : *relations) {
    if (!r.is_object()) return Malformed("relations must be objects");
    ReconstructedRelation rel;
    PROV_ASSIGN_OR_RETURN(const json* name,
                          Field(r, "name", json::value_t::string));
    rel.schema.relation = name->get<std::string>();
    PROV_ASSIGN_OR_RETURN(const json* attrs,
                          Field(r, "attributes", json::value_t::array));
    PROV_ASSIGN_OR_RETURN(rel.schema.attributes, AttributesFromJson(*attrs));
    PROV_ASSIGN_OR_RETURN(const json* rows,
                          Field(r, "rows", json::value_t::array));
    for (const json& row : *rows) {
      if (!row.is_object() || !row.contains("result_row") ||
          !row["result_row"].is_number_unsigned() || !row.contains("cells") ||
          !row["cells"].is_array()) {
        return Malformed("row needs 'result_row' and 'cells'");
      }
      ReconstructedTuple tuple;
      tuple.result_row = row["result_row"].get<size_t>();
      if (row.contains("origin") && row["origin"].is_string()) {
        PROV_ASSIGN_OR_RETURN(tuple.origin,
                              TupleId::Parse(row["origin"].get<std::string>()));
      }
      for (const json& c : row["cells"]) {
        if (!c.is_object() || !c.contains("s") || !c["s"].is_string()) {
          return Malformed("cell needs 's'");
        }
        std::optional<CellStatus> status =
            ParseCellStatus(c["s"].get<std::string>());
        if (!status.has_value()) return Malformed("unknown cell status");
        Cell cell;
        cell.status = *status;
        if (c.contains("v")) {
          PROV_ASSIGN_OR_RETURN(cell.value, ValueFromJson(c["v"]));
        }
        if (c.contains("label") && c["label"].is_string()) {
          cell.label = c["label"].get<std::string>();
        }
        tuple.cells.push_back(std::move(cell));
      }
      if (tuple.cells.size() != rel.schema.arity()) {
        return Malformed("row arity does not match the schema");
      }
      rel.tuples.push_back(std::move(tuple));
    }
    rec.relations.push_back(std::move(rel));
  }
  return rec;
}

std::string ReportToJson(const DisclosureReport& report) {
  return ReportToJsonObject(report).dump(2) + "\n";
}

std::string ComparisonToJson(const LevelComparison& comparison) {
  json levels = json::array();
  json reports = json::array();
  for (const DisclosureReport& r : comparison.reports) {
    levels.push_back(
        {{"level", std::string(LevelName(r.level))},
         {"leakage", absl::StrCat(r.disclosed, "/", r.sensitive_total)},
         {"score", r.leakage()},
         {"k_min", r.k_min.has_value() ? json(*r.k_min) : json("n/a")},
         {"verdict", r.pass ? "PASS" : "FAIL"}});
    reports.push_back(ReportToJsonObject(r));
  }
  return json{{"levels", levels}, {"reports", reports}}.dump(2) + "\n";
}

std::string MitigationReportToJson(const DisclosureReport& before,
                                   const DisclosureReport& after) {
  return json{{"before", ReportToJsonObject(before)},
              {"after", ReportToJsonObject(after)}}
             .dump(2) +
         "\n";
}

absl::StatusOr<PrivacyPolicy> ParsePolicyJson(absl::string_view text) {
  PROV_ASSIGN_OR_RETURN(json doc, ParseDocument(text, "policy"));
  PrivacyPolicy policy;
  if (doc.contains("sensitive")) {
    PROV_ASSIGN_OR_RETURN(policy.sensitive, SourceAttributes(doc["sensitive"]));
  }
  if (doc.contains("quasi_identifiers")) {
    PROV_ASSIGN_OR_RETURN(policy.quasi_identifiers,
                          SourceAttributes(doc["quasi_identifiers"]));
  }
  if (doc.contains("k")) {
    if (!doc["k"].is_number_integer()) return Malformed("k must be an integer");
    policy.k = doc["k"].get<int>();
  }
  return policy;
}

absl::StatusOr<GeneralizationHierarchy> ParseHierarchyJson(
    absl::string_view text, const Catalog& catalog) {
  PROV_ASSIGN_OR_RETURN(json doc, ParseDocument(text, "hierarchy"));
  PROV_ASSIGN_OR_RETURN(const json* relation,
                        Field(doc, "relation", json::value_t::string));
  PROV_ASSIGN_OR_RETURN(const json* attribute,
                        Field(doc, "attribute", json::value_t::string));
  PROV_ASSIGN_OR_RETURN(const json* levels,
                        Field(doc, "levels", json::value_t::array));
  SourceAttribute attr{relation->get<std::string>(),
                       attribute->get<std::string>()};
  const Schema* schema = catalog.Find(attr.relation);
  std::optional<size_t> index =
      schema ? schema->IndexOf(attr.attribute) : std::nullopt;
  if (!index.has_value()) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     error_kind::kUnknownAttribute,
                     absl::StrCat("hierarchy targets unknown attribute ",
                                  attr.ToString()));
  }
  std::vector<std::map<std::string, std::string>> maps;
  for (size_t i = 0; i < levels->size(); ++i) {
    const json& level = (*levels)[i];
    std::map<std::string, std::string> map;
    if (i == 0) {
      // Identity placeholder; its contents are ignored.
      maps.push_back({});
      continue;
    }
    if (!level.is_object()) {
      return Malformed(absl::StrCat("hierarchy level ", i, " must be an object"));
    }
    for (const auto& [key, label] : level.items()) {
      if (!label.is_string()) return Malformed("labels must be strings");
      map.emplace(key, label.get<std::string>());
    }
    maps.push_back(std::move(map));
  }
  return GeneralizationHierarchy::Create(
      std::move(attr), schema->attributes[*index].type, std::move(maps));
}

}  // namespace prov
