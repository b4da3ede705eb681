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

#include "v2v/money.hpp"

#include <string>

namespace v2v {

std::string Money::ToString() const {
  const std::int64_t abs_units = units_ < 0 ? -units_ : units_;
  std::string whole = std::to_string(abs_units / kUnitsPerCent);
  std::string frac = std::to_string(abs_units % kUnitsPerCent);
  frac.insert(0, 4 - frac.size(), '0');
  return (units_ < 0 ? "-" : "") + whole + "." + frac;
}

}  // namespace v2v
