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

#ifndef PROV_RELATION_H_
#define PROV_RELATION_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "prov/value.h"

namespace prov {

struct Attribute {
  std::string name;
  AttributeType type = AttributeType::kText;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

struct Schema {
  std::string relation;
  std::vector<Attribute> attributes;

  size_t arity() const { return attributes.size(); }
  std::optional<size_t> IndexOf(absl::string_view attribute) const;

  friend bool operator==(const Schema&, const Schema&) = default;
};

// Schemas of all source relations, in declaration order.
class Catalog {
 public:
  Catalog() = default;

  // Fails with DuplicateName on repeated relation or attribute names.
  static absl::StatusOr<Catalog> Create(std::vector<Schema> schemas);

  const Schema* Find(absl::string_view relation) const;
  const std::vector<Schema>& schemas() const { return schemas_; }

  friend bool operator==(const Catalog&, const Catalog&) = default;

 private:
  std::vector<Schema> schemas_;
};

// Identity of a source tuple: relation name plus its load-order ordinal.
struct TupleId {
  std::string relation;
  uint32_t ordinal = 0;

  // "Grades/0".
  std::string ToString() const;
  static absl::StatusOr<TupleId> Parse(absl::string_view text);

  friend bool operator==(const TupleId&, const TupleId&) = default;
  friend auto operator<=>(const TupleId&, const TupleId&) = default;
};

// A source relation. The tuple at index i has TupleId {schema.relation, i}.
struct Relation {
  Schema schema;
  std::vector<Row> rows;

  TupleId IdOf(size_t index) const {
    return TupleId{schema.relation, static_cast<uint32_t>(index)};
  }

  // Checks arity and value types of every row.
  absl::Status Validate() const;

  friend bool operator==(const Relation&, const Relation&) = default;
};

// Immutable after construction.
class Database {
 public:
  Database() = default;

  static absl::StatusOr<Database> Create(std::vector<Relation> relations);

  const Relation* Find(absl::string_view relation) const;
  const Row* Lookup(const TupleId& id) const;
  const std::map<std::string, Relation, std::less<>>& relations() const {
    return relations_;
  }
  Catalog catalog() const;

  friend bool operator==(const Database&, const Database&) = default;

 private:
  std::map<std::string, Relation, std::less<>> relations_;
};

// Values of `row` (laid out per `schema`) in the order of `attributes`.
absl::StatusOr<Row> ProjectTuple(const Row& row, const Schema& schema,
                                 std::span<const std::string> attributes);

}  // namespace prov

#endif  // PROV_RELATION_H_
