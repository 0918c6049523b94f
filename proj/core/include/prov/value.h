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

#ifndef PROV_VALUE_H_
#define PROV_VALUE_H_

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "absl/strings/string_view.h"
#include "prov/decimal.h"

namespace prov {

enum class AttributeType { kNumber, kText };

absl::string_view AttributeTypeName(AttributeType type);

// A cell value: Null, an exact decimal, or text.
//
// operator== and operator<=> are structural (Null equals Null) and are used
// for set semantics and ordering. Query predicates and joins use SqlEquals /
// SqlCompare instead, under which Null matches nothing.
class Value {
 public:
  Value() = default;
  static Value Null() { return Value(); }
  static Value Num(Decimal d) { return Value(Rep(d)); }
  static Value Txt(std::string s) { return Value(Rep(std::move(s))); }

  bool is_null() const { return std::holds_alternative<std::monostate>(rep_); }
  bool is_number() const { return std::holds_alternative<Decimal>(rep_); }
  bool is_text() const { return std::holds_alternative<std::string>(rep_); }

  Decimal number() const { return std::get<Decimal>(rep_); }
  const std::string& text() const { return std::get<std::string>(rep_); }

  // Whether a non-null value may live in a column of `type`.
  bool ConformsTo(AttributeType type) const;

  // Numbers print as decimals, text verbatim, Null as "".
  std::string ToString() const;

  friend bool operator==(const Value&, const Value&) = default;
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  using Rep = std::variant<std::monostate, Decimal, std::string>;
  explicit Value(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

using Row = std::vector<Value>;

// Equality under query semantics: false whenever either side is Null.
bool SqlEquals(const Value& a, const Value& b);

// Three-way comparison under query semantics; nullopt when either side is
// Null or the kinds differ.
std::optional<std::strong_ordering> SqlCompare(const Value& a, const Value& b);

}  // namespace prov

#endif  // PROV_VALUE_H_
