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

#include "prov/value.h"

namespace prov {

absl::string_view AttributeTypeName(AttributeType type) {
  return type == AttributeType::kNumber ? "number" : "text";
}

bool Value::ConformsTo(AttributeType type) const {
  if (is_null()) return true;
  return type == AttributeType::kNumber ? is_number() : is_text();
}

std::string Value::ToString() const {
  if (is_number()) return number().ToString();
  if (is_text()) return text();
  return "";
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.rep_.index() != b.rep_.index()) {
    return a.rep_.index() <=> b.rep_.index();
  }
  if (a.is_number()) return a.number() <=> b.number();
  if (a.is_text()) return a.text().compare(b.text()) <=> 0;
  return std::strong_ordering::equal;
}

bool SqlEquals(const Value& a, const Value& b) {
  if (a.is_null() || b.is_null()) return false;
  return a == b;
}

std::optional<std::strong_ordering> SqlCompare(const Value& a,
                                               const Value& b) {
  if (a.is_null() || b.is_null()) return std::nullopt;
  if (a.is_number() && b.is_number()) return a.number() <=> b.number();
  if (a.is_text() && b.is_text()) return a.text().compare(b.text()) <=> 0;
  return std::nullopt;
}

}  // namespace prov
