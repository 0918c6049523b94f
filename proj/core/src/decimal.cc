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

#include "prov/decimal.h"

#include <cmath>
#include <cstdlib>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "prov/status.h"

namespace prov {

absl::StatusOr<Decimal> Decimal::Parse(absl::string_view text) {
  auto fail = [&]() {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     error_kind::kTypeParseError,
                     absl::StrCat("not a decimal number: '", text, "'"));
  };
  absl::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && rest.front() == '-') {
    negative = true;
    rest.remove_prefix(1);
  }
  const size_t dot = rest.find('.');
  absl::string_view int_part = rest.substr(0, dot);
  absl::string_view frac_part =
      dot == absl::string_view::npos ? absl::string_view() : rest.substr(dot + 1);
  if (int_part.empty() || int_part.size() > 14) return fail();
  if (dot != absl::string_view::npos &&
      (frac_part.empty() || frac_part.size() > kFractionDigits)) {
    return fail();
  }
  int64_t scaled = 0;
  for (char c : int_part) {
    if (c < '0' || c > '9') return fail();
    scaled = scaled * 10 + (c - '0');
  }
  int64_t frac = 0;
  for (size_t i = 0; i < static_cast<size_t>(kFractionDigits); ++i) {
    frac *= 10;
    if (i < frac_part.size()) {
      const char c = frac_part[i];
      if (c < '0' || c > '9') return fail();
      frac += c - '0';
    }
  }
  scaled = scaled * kScale + frac;
  return FromScaled(negative ? -scaled : scaled);
}

Decimal Decimal::FromDouble(double v) {
  return FromScaled(static_cast<int64_t>(std::llround(v * kScale)));
}

std::string Decimal::ToString() const {
  const bool negative = scaled_ < 0;
  const uint64_t magnitude =
      negative ? -static_cast<uint64_t>(scaled_) : static_cast<uint64_t>(scaled_);
  std::string frac = absl::StrFormat("%04d", magnitude % kScale);
  while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
  return absl::StrCat(negative ? "-" : "", magnitude / kScale, ".", frac);
}

Decimal Decimal::DivideBy(int64_t divisor) const {
  const bool negative = (scaled_ < 0) != (divisor < 0);
  const int64_t num = std::llabs(scaled_);
  const int64_t den = std::llabs(divisor);
  const int64_t q = (2 * num + den) / (2 * den);
  return FromScaled(negative ? -q : q);
}

}  // namespace prov
