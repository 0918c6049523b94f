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

#ifndef PROV_WITNESS_H_
#define PROV_WITNESS_H_

#include <set>
#include <string>
#include <vector>

#include "prov/polynomial.h"
#include "prov/relation.h"

namespace prov {

using Witness = std::set<TupleId>;

// A why-provenance witness basis, kept as a minimal antichain: no witness is
// a proper superset of another. Sum is union and product is pairwise union,
// each followed by minimization, which makes this a commutative semiring
// with Zero = {} and One = {{}}.
class WitnessBasis {
 public:
  WitnessBasis() = default;  // zero: no witness

  static WitnessBasis Zero() { return WitnessBasis(); }
  static WitnessBasis One();
  static WitnessBasis Var(TupleId id);
  static WitnessBasis FromWitnesses(std::vector<Witness> witnesses);

  const std::set<Witness>& witnesses() const { return witnesses_; }
  bool empty() const { return witnesses_.empty(); }

  // Union of all witnesses.
  std::set<TupleId> Tuples() const;

  std::string ToString() const;

  WitnessBasis& operator+=(const WitnessBasis& other);
  friend WitnessBasis operator+(WitnessBasis a, const WitnessBasis& b) {
    a += b;
    return a;
  }
  friend WitnessBasis operator*(const WitnessBasis& a, const WitnessBasis& b);

  friend bool operator==(const WitnessBasis&, const WitnessBasis&) = default;

 private:
  void Minimize();

  std::set<Witness> witnesses_;
};

// Drops coefficients and exponents: each monomial becomes the set of its
// variables, and the result is reduced to a minimal antichain.
WitnessBasis SupportOf(const Polynomial& p);

}  // namespace prov

#endif  // PROV_WITNESS_H_
