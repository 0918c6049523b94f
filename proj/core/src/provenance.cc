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

#include "prov/provenance.h"

#include "absl/strings/str_cat.h"

namespace prov {
namespace {

WhereProvenance Lineage(const Expr& expr, const Catalog& catalog) {
  return std::visit(
      [&](const auto& node) -> WhereProvenance {
        using T = std::decay_t<decltype(node)>;
        WhereProvenance out;
        if constexpr (std::is_same_v<T, ScanExpr>) {
          out.relations.insert(node.relation);
          if (const Schema* schema = catalog.Find(node.relation)) {
            for (const Attribute& attr : schema->attributes) {
              out.attributes.push_back(
                  {attr.name, {{node.relation, attr.name}}});
            }
          }
        } else if constexpr (std::is_same_v<T, SelectExpr>) {
          out = Lineage(*node.input, catalog);
        } else if constexpr (std::is_same_v<T, ProjectExpr>) {
          WhereProvenance in = Lineage(*node.input, catalog);
          out.relations = in.relations;
          for (const std::string& name : node.attributes) {
            const std::set<SourceAttribute>* sources = in.SourcesOf(name);
            out.attributes.push_back(
                {name, sources ? *sources : std::set<SourceAttribute>{}});
          }
        } else if constexpr (std::is_same_v<T, JoinExpr>) {
          out = Lineage(*node.left, catalog);
          WhereProvenance right = Lineage(*node.right, catalog);
          out.relations.insert(right.relations.begin(), right.relations.end());
          out.attributes.insert(out.attributes.end(), right.attributes.begin(),
                                right.attributes.end());
        } else {
          WhereProvenance in = Lineage(*node.input, catalog);
          out.relations = in.relations;
          for (const std::string& name : node.group_by) {
            const std::set<SourceAttribute>* sources = in.SourcesOf(name);
            out.attributes.push_back(
                {name, sources ? *sources : std::set<SourceAttribute>{}});
          }
          std::set<SourceAttribute> target_sources;
          if (node.target.has_value()) {
            if (const auto* s = in.SourcesOf(*node.target)) target_sources = *s;
          }
          out.attributes.push_back(
              {AggregateOutputName(node.fn, node.target), target_sources});
        }
        return out;
      },
      expr.node);
}

}  // namespace

absl::string_view LevelName(ProvenanceLevel level) {
  switch (level) {
    case ProvenanceLevel::kWhere: return "where";
    case ProvenanceLevel::kWhy: return "why";
    case ProvenanceLevel::kHow: return "how";
  }
  return "?";
}

std::optional<ProvenanceLevel> ParseLevel(absl::string_view name) {
  for (ProvenanceLevel level : kAllLevels) {
    if (LevelName(level) == name) return level;
  }
  return std::nullopt;
}

std::string SourceAttribute::ToString() const {
  return absl::StrCat(relation, ".", attribute);
}

std::optional<SourceAttribute> SourceAttribute::Parse(absl::string_view text) {
  const size_t dot = text.find('.');
  if (dot == absl::string_view::npos || dot == 0 || dot + 1 == text.size()) {
    return std::nullopt;
  }
  return SourceAttribute{std::string(text.substr(0, dot)),
                         std::string(text.substr(dot + 1))};
}

const std::set<SourceAttribute>* WhereProvenance::SourcesOf(
    absl::string_view attribute) const {
  for (const AttributeLineage& lineage : attributes) {
    if (lineage.attribute == attribute) return &lineage.sources;
  }
  return nullptr;
}

WhereProvenance WhereOfAst(const TypedQuery& query) {
  return Lineage(query.expr, query.catalog);
}

}  // namespace prov
