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

#include "prov/witness.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace prov {

WitnessBasis WitnessBasis::One() {
  WitnessBasis b;
  b.witnesses_.insert(Witness{});
  return b;
}

WitnessBasis WitnessBasis::Var(TupleId id) {
  WitnessBasis b;
  b.witnesses_.insert(Witness{std::move(id)});
  return b;
}

WitnessBasis WitnessBasis::FromWitnesses(std::vector<Witness> witnesses) {
  WitnessBasis b;
  b.witnesses_.insert(std::make_move_iterator(witnesses.begin()),
                      std::make_move_iterator(witnesses.end()));
  b.Minimize();
  return b;
}

std::set<TupleId> WitnessBasis::Tuples() const {
  std::set<TupleId> out;
  for (const Witness& w : witnesses_) out.insert(w.begin(), w.end());
  return out;
}

std::string WitnessBasis::ToString() const {
  return absl::StrCat(
      "{",
      absl::StrJoin(witnesses_, ", ",
                    [](std::string* out, const Witness& w) {
                      absl::StrAppend(
                          out, "{",
                          absl::StrJoin(w, ", ",
                                        [](std::string* o, const TupleId& id) {
                                          o->append(id.ToString());
                                        }),
                          "}");
                    }),
      "}");
}

void WitnessBasis::Minimize() {
  std::vector<const Witness*> by_size;
  for (const Witness& w : witnesses_) by_size.push_back(&w);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const Witness* a, const Witness* b) {
                     return a->size() < b->size();
                   });
  std::vector<const Witness*> kept;
  for (const Witness* w : by_size) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](const Witness* k) {
          return std::includes(w->begin(), w->end(), k->begin(), k->end());
        });
    if (!dominated) kept.push_back(w);
  }
  std::set<Witness> minimal;
  for (const Witness* w : kept) minimal.insert(*w);
  witnesses_ = std::move(minimal);
}

WitnessBasis& WitnessBasis::operator+=(const WitnessBasis& other) {
  witnesses_.insert(other.witnesses_.begin(), other.witnesses_.end());
  Minimize();
  return *this;
}

WitnessBasis operator*(const WitnessBasis& a, const WitnessBasis& b) {
  WitnessBasis out;
  for (const Witness& wa : a.witnesses_) {
    for (const Witness& wb : b.witnesses_) {
      Witness w = wa;
      w.insert(wb.begin(), wb.end());
      out.witnesses_.insert(std::move(w));
    }
  }
  out.Minimize();
  return out;
}

WitnessBasis SupportOf(const Polynomial& p) {
  std::vector<Witness> witnesses;
  for (const auto& [m, c] : p.terms()) {
    witnesses.emplace_back(m.begin(), m.end());
  }
  return WitnessBasis::FromWitnesses(std::move(witnesses));
}

}  // namespace prov
