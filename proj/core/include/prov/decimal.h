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

#ifndef PROV_DECIMAL_H_
#define PROV_DECIMAL_H_

#include <compare>
#include <cstdint>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace prov {

// Exact fixed-point decimal with four fractional digits, stored as a scaled
// 64-bit integer. Grades such as 1.3 and averages such as 1.15 compare
// exactly, and printing is identical on every platform.
class Decimal {
 public:
  static constexpr int kFractionDigits = 4;
  static constexpr int64_t kScale = 10000;

  constexpr Decimal() = default;

  static constexpr Decimal FromScaled(int64_t scaled) {
    Decimal d;
    d.scaled_ = scaled;
    return d;
  }
  static constexpr Decimal FromInt(int64_t v) { return FromScaled(v * kScale); }

  // Accepts `-?digits(.digits)?` with at most four fractional digits.
  static absl::StatusOr<Decimal> Parse(absl::string_view text);

  // Rounds to the nearest representable decimal; used when reading JSON
  // numbers, which arrive as doubles.
  static Decimal FromDouble(double v);

  constexpr int64_t scaled() const { return scaled_; }
  double ToDouble() const { return static_cast<double>(scaled_) / kScale; }

  // Shortest form with at least one fractional digit: "1.0", "1.15", "-0.5".
  std::string ToString() const;

  // Quotient rounded to four places, half away from zero. `divisor` != 0.
  Decimal DivideBy(int64_t divisor) const;

  friend constexpr Decimal operator+(Decimal a, Decimal b) {
    return FromScaled(a.scaled_ + b.scaled_);
  }
  friend constexpr Decimal operator-(Decimal a, Decimal b) {
    return FromScaled(a.scaled_ - b.scaled_);
  }
  Decimal& operator+=(Decimal o) {
    scaled_ += o.scaled_;
    return *this;
  }

  friend constexpr auto operator<=>(Decimal, Decimal) = default;

 private:
  int64_t scaled_ = 0;
};

}  // namespace prov

#endif  // PROV_DECIMAL_H_
