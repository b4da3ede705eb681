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

#ifndef V2V_ERRORS_HPP_
#define V2V_ERRORS_HPP_

#include <stdexcept>

namespace v2v {

// Bad scenario configuration: inverted ranges, empty facility lists, broken
// price ordering.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller passed a value outside an operation's precondition.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Provider surplus cannot cover the consumer's request (a_P < a_C).
class FeasibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exhaustive oracles refuse inputs whose enumeration would explode.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace v2v

#endif  // V2V_ERRORS_HPP_
