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

#ifndef OSBRP_ORACLE_H_
#define OSBRP_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "osbrp/model.h"

namespace osbrp {

// Exhaustive reference optimizer. Deliberately exponential in the number of
// visits; intended for small instances and for checking the linear solver.

struct InterventionRange {
  Bikes lower = 0;
  Bikes upper = 0;

  std::uint64_t width() const {
    return upper < lower ? 0 : static_cast<std::uint64_t>(upper - lower) + 1;
  }
};

struct OracleOptions {
  // Per-visit search box; defaults to each vehicle's [q - Q, q].
  std::optional<std::vector<InterventionRange>> bounds;
  std::uint64_t limit = 1'000'000;
  std::size_t max_vectors = 64;
};

struct OracleResult {
  Bikes best_loss = 0;
  // Optimal vectors in lexicographic order, at most max_vectors of them.
  std::vector<std::vector<Bikes>> best_vectors;
  bool best_vectors_truncated = false;
  std::uint64_t search_space_size = 0;
};

// Product of box widths, saturating at UINT64_MAX.
std::uint64_t SearchSpaceSize(const std::vector<InterventionRange>& box);

// Minimum full-horizon loss over every integer vector in the box. Throws
// SearchSpaceError when the box holds more than `limit` vectors.
OracleResult BruteForce(const Instance& instance,
                        const OracleOptions& options = {});

// [-(C + sum |d|), C + sum |d|] for every visit. No intervention outside
// this bracket can do better than its nearest endpoint.
std::vector<InterventionRange> WideBracket(const Instance& instance);

struct SweepPoint {
  Bikes intervention = 0;
  Bikes loss = 0;  // on [e_1, m]
};

// Loss profile of a single-visit instance over `bracket`, ignoring the
// vehicle window. Throws ContractError unless the instance has exactly one
// visit.
std::vector<SweepPoint> Sweep1D(const Instance& instance,
                                InterventionRange bracket);

}  // namespace osbrp

#endif  // OSBRP_ORACLE_H_
