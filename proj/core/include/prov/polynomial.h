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

#ifndef PROV_POLYNOMIAL_H_
#define PROV_POLYNOMIAL_H_

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "prov/relation.h"

namespace prov {

// Sorted multiset of tuple variables; t0*t1^2 is {t0, t1, t1}.
using Monomial = std::vector<TupleId>;

// Element of N[X] over tuple variables: the how-provenance semiring.
//
// The representation is canonical by construction: monomials are kept sorted
// (lexicographically by variable multiset), like monomials are merged and no
// coefficient is zero. Structural equality is therefore semantic equality.
class Polynomial {
 public:
  Polynomial() = default;  // zero

  static Polynomial Zero() { return Polynomial(); }
  static Polynomial One() { return Constant(1); }
  static Polynomial Constant(uint64_t c);
  static Polynomial Var(TupleId id);
  static Polynomial Term(uint64_t coefficient, Monomial monomial);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, uint64_t>& terms() const { return terms_; }

  // Distinct variables over all monomials.
  std::set<TupleId> Variables() const;

  // "2*t[Grades/0]*t[Grades/1]^2 + t[Grades/2]"; zero prints as "0".
  std::string ToString() const;
  static absl::StatusOr<Polynomial> Parse(absl::string_view text);

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend auto operator<=>(const Polynomial&, const Polynomial&) = default;

 private:
  void Add(const Monomial& m, uint64_t c);

  std::map<Monomial, uint64_t> terms_;
};

}  // namespace prov

#endif  // PROV_POLYNOMIAL_H_
