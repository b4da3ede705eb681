// Copyright 2026 The V2V Match Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef V2V_MONEY_HPP_
#define V2V_MONEY_HPP_

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

namespace v2v {

// Fixed-point amount of money. One unit is 1/10000 of a cent, so sums of
// utilities and matching weights compare exactly.
class Money {
 public:
  static constexpr std::int64_t kUnitsPerCent = 10'000;

  constexpr Money() = default;

  static constexpr Money FromUnits(std::int64_t units) { return Money(units); }
  static Money FromCents(double cents) {
    return Money(static_cast<std::int64_t>(
        std::llround(cents * static_cast<double>(kUnitsPerCent))));
  }

  constexpr std::int64_t units() const { return units_; }
  constexpr double cents() const {
    return static_cast<double>(units_) / static_cast<double>(kUnitsPerCent);
  }

  // Exact decimal rendering in cents, e.g. "-307.5000".
  std::string ToString() const;

  constexpr Money operator-() const { return Money(-units_); }
  constexpr Money& operator+=(Money o) {
    units_ += o.units_;
    return *this;
  }
  constexpr Money& operator-=(Money o) {
    units_ -= o.units_;
    return *this;
  }
  friend constexpr Money operator+(Money a, Money b) { return a += b; }
  friend constexpr Money operator-(Money a, Money b) { return a -= b; }
  friend constexpr Money operator*(Money a, std::int64_t k) {
    return Money(a.units_ * k);
  }
  friend constexpr auto operator<=>(Money, Money) = default;

 private:
  constexpr explicit Money(std::int64_t units) : units_(units) {}
  std::int64_t units_ = 0;
};

}  // namespace v2v

#endif  // V2V_MONEY_HPP_
