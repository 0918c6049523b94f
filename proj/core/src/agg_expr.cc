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

#include "prov/agg_expr.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "prov/status.h"

namespace prov {
namespace {

std::string QuoteText(absl::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string TermValueToString(const Value& v) {
  if (v.is_text()) return QuoteText(v.text());
  if (v.is_null()) return "null";
  return v.ToString();
}

absl::Status Malformed(absl::string_view text, absl::string_view what) {
  return MakeError(absl::StatusCode::kInvalidArgument,
                   error_kind::kMalformedDocument,
                   absl::StrCat("aggregation expression '", text, "': ", what));
}

}  // namespace

absl::StatusOr<Value> AggregateValues(AggFn fn, std::span<const Value> values) {
  if (fn == AggFn::kCount) {
    return Value::Num(Decimal::FromInt(static_cast<int64_t>(values.size())));
  }
  std::vector<Decimal> numbers;
  for (const Value& v : values) {
    if (v.is_null()) continue;
    if (!v.is_number()) {
      return MakeError(absl::StatusCode::kFailedPrecondition,
                       error_kind::kTypeMismatch,
                       absl::StrCat("cannot aggregate non-number '",
                                    v.ToString(), "' with ", AggFnTag(fn)));
    }
    numbers.push_back(v.number());
  }
  if (numbers.empty()) return Value::Null();
  switch (fn) {
    case AggFn::kMin:
      return Value::Num(*std::min_element(numbers.begin(), numbers.end()));
    case AggFn::kMax:
      return Value::Num(*std::max_element(numbers.begin(), numbers.end()));
    default: {
      Decimal sum;
      for (Decimal d : numbers) sum += d;
      if (fn == AggFn::kSum) return Value::Num(sum);
      return Value::Num(sum.DivideBy(static_cast<int64_t>(numbers.size())));
    }
  }
}

absl::StatusOr<Value> AggExpr::Evaluate() const {
  std::vector<Value> values;
  values.reserve(terms.size());
  for (const AggTerm& term : terms) values.push_back(term.value);
  return AggregateValues(fn, values);
}

std::set<TupleId> AggExpr::Variables() const {
  std::set<TupleId> vars;
  for (const AggTerm& term : terms) {
    std::set<TupleId> v = term.annotation.Variables();
    vars.insert(v.begin(), v.end());
  }
  return vars;
}

std::string AggExpr::ToString() const {
  return absl::StrCat(
      AggFnTag(fn), "[",
      absl::StrJoin(terms, ",",
                    [](std::string* out, const AggTerm& term) {
                      absl::StrAppend(out, "(", term.annotation.ToString(), ",",
                                      TermValueToString(term.value), ")");
                    }),
      "]");
}

absl::StatusOr<AggExpr> AggExpr::Parse(absl::string_view text) {
  const size_t open = text.find('[');
  if (open == absl::string_view::npos || text.empty() || text.back() != ']') {
    return Malformed(text, "expected TAG[...]");
  }
  AggExpr out;
  std::optional<AggFn> fn = AggFnFromName(text.substr(0, open));
  if (!fn.has_value()) return Malformed(text, "unknown aggregate tag");
  out.fn = *fn;
  absl::string_view body = text.substr(open + 1, text.size() - open - 2);
  size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] != '(') return Malformed(text, "expected '('");
    const size_t comma = body.find(',', pos);
    if (comma == absl::string_view::npos) return Malformed(text, "expected ','");
    PROV_ASSIGN_OR_RETURN(Polynomial annotation,
                          Polynomial::Parse(body.substr(pos + 1, comma - pos - 1)));
    pos = comma + 1;
    Value value;
    if (pos < body.size() && body[pos] == '"') {
      std::string s;
      ++pos;
      while (pos < body.size() && body[pos] != '"') {
        if (body[pos] == '\\' && pos + 1 < body.size()) ++pos;
        s.push_back(body[pos++]);
      }
      if (pos >= body.size()) return Malformed(text, "unterminated string");
      ++pos;
      value = Value::Txt(std::move(s));
    } else {
      const size_t close = body.find(')', pos);
      if (close == absl::string_view::npos) return Malformed(text, "expected ')'");
      absl::string_view token = body.substr(pos, close - pos);
      if (token != "null") {
        absl::StatusOr<Decimal> d = Decimal::Parse(token);
        if (!d.ok()) return Malformed(text, "bad term value");
        value = Value::Num(*d);
      }
      pos = close;
    }
    if (pos >= body.size() || body[pos] != ')') {
      return Malformed(text, "expected ')'");
    }
    ++pos;
    out.terms.push_back({std::move(annotation), std::move(value)});
    if (pos < body.size()) {
      if (body[pos] != ',') return Malformed(text, "expected ','");
      ++pos;
    }
  }
  return out;
}

}  // namespace prov
