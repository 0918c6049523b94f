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

#include "prov/polynomial.h"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "prov/status.h"

namespace prov {
namespace {

std::string MonomialToString(const Monomial& m, uint64_t coefficient) {
  std::vector<std::string> factors;
  if (coefficient != 1 || m.empty()) factors.push_back(absl::StrCat(coefficient));
  for (size_t i = 0; i < m.size();) {
    size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    std::string factor = absl::StrCat("t[", m[i].ToString(), "]");
    if (j - i > 1) absl::StrAppend(&factor, "^", j - i);
    factors.push_back(std::move(factor));
    i = j;
  }
  return absl::StrJoin(factors, "*");
}

class PolyScanner {
 public:
  explicit PolyScanner(absl::string_view text) : text_(text) {}

  absl::StatusOr<Polynomial> Run() {
    SkipSpace();
    if (text_.substr(pos_) == "0") return Polynomial::Zero();
    Polynomial result;
    while (true) {
      PROV_ASSIGN_OR_RETURN(Polynomial term, Term());
      result += term;
      SkipSpace();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != '+') return Error("expected '+'");
      ++pos_;
    }
    return result;
  }

 private:
  absl::Status Error(absl::string_view what) const {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     error_kind::kMalformedDocument,
                     absl::StrCat("polynomial '", text_, "' at offset ", pos_,
                                  ": ", what));
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  absl::StatusOr<uint64_t> Number() {
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_,
                                     text_.data() + text_.size(), v);
    if (ec != std::errc()) return Error("expected a number");
    pos_ = ptr - text_.data();
    return v;
  }

  absl::StatusOr<Polynomial> Term() {
    uint64_t coefficient = 1;
    Monomial monomial;
    bool first = true;
    while (true) {
      SkipSpace();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(
                                      text_[pos_]))) {
        if (!first) return Error("coefficient must come first");
        PROV_ASSIGN_OR_RETURN(coefficient, Number());
      } else if (text_.substr(pos_, 2) == "t[") {
        pos_ += 2;
        const size_t close = text_.find(']', pos_);
        if (close == absl::string_view::npos) return Error("unclosed 't['");
        PROV_ASSIGN_OR_RETURN(TupleId id,
                              TupleId::Parse(text_.substr(pos_, close - pos_)));
        pos_ = close + 1;
        uint64_t exponent = 1;
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          PROV_ASSIGN_OR_RETURN(exponent, Number());
          if (exponent == 0) return Error("zero exponent");
        }
        for (uint64_t e = 0; e < exponent; ++e) monomial.push_back(id);
      } else {
        return Error("expected a coefficient or a variable");
      }
      first = false;
      SkipSpace();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (coefficient == 0) return Error("zero coefficient");
    std::sort(monomial.begin(), monomial.end());
    return Polynomial::Term(coefficient, std::move(monomial));
  }

  absl::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::Constant(uint64_t c) {
  Polynomial p;
  p.Add({}, c);
  return p;
}

Polynomial Polynomial::Var(TupleId id) {
  Polynomial p;
  p.Add({std::move(id)}, 1);
  return p;
}

Polynomial Polynomial::Term(uint64_t coefficient, Monomial monomial) {
  std::sort(monomial.begin(), monomial.end());
  Polynomial p;
  p.Add(monomial, coefficient);
  return p;
}

void Polynomial::Add(const Monomial& m, uint64_t c) {
  if (c == 0) return;
  terms_[m] += c;
}

std::set<TupleId> Polynomial::Variables() const {
  std::set<TupleId> vars;
  for (const auto& [m, c] : terms_) vars.insert(m.begin(), m.end());
  return vars;
}

std::string Polynomial::ToString() const {
  if (terms_.empty()) return "0";
  return absl::StrJoin(terms_, " + ", [](std::string* out, const auto& term) {
    out->append(MonomialToString(term.first, term.second));
  });
}

absl::StatusOr<Polynomial> Polynomial::Parse(absl::string_view text) {
  return PolyScanner(text).Run();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) Add(m, c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(),
                 std::back_inserter(m));
      out.Add(m, ca * cb);
    }
  }
  return out;
}

}  // namespace prov
