// Copyright 2026 The osbrp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OSBRP_ERRORS_H_
#define OSBRP_ERRORS_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace osbrp {

// Malformed or invalid user input. `field()` holds a path such as
// "visits[1].epoch" when the problem can be pinned to one field.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& message, std::string field = {})
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// An intervention outside the vehicle window [q - Q, q].
class FeasibilityError : public InputError {
 public:
  FeasibilityError(std::size_t visit_index, const std::string& message)
      : InputError(message,
                   "interventions[" + std::to_string(visit_index) + "]"),
        visit_index_(visit_index) {}

  // 0-based position in the intervention vector.
  std::size_t visit_index() const { return visit_index_; }

 private:
  std::size_t visit_index_;
};

// Epoch or stage bounds outside the horizon.
class RangeError : public InputError {
 public:
  using InputError::InputError;
};

// A caller broke a precondition that valid inputs cannot trigger, or an
// internal invariant failed.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exhaustive search refused because the box is larger than the limit.
class SearchSpaceError : public std::runtime_error {
 public:
  SearchSpaceError(std::uint64_t size, std::uint64_t limit)
      : std::runtime_error("search space of " + std::to_string(size) +
                           " vectors exceeds limit " + std::to_string(limit)),
        size_(size),
        limit_(limit) {}

  std::uint64_t size() const { return size_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t size_;
  std::uint64_t limit_;
};

}  // namespace osbrp

#endif  // OSBRP_ERRORS_H_
