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

#ifndef OSBRP_INSTANCE_IO_H_
#define OSBRP_INSTANCE_IO_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "osbrp/model.h"

namespace osbrp {

// Instance documents are JSON:
//
//   {"capacity": 10, "initial_stock": 4, "demand": [2, -3, 0],
//    "visits": [{"epoch": 2, "load": 3, "capacity": 5}]}
//
// Unknown keys are rejected. Errors carry a field path, e.g.
// "visits[1].epoch".
Instance ParseInstance(std::string_view text);
Instance ReadInstanceFile(const std::filesystem::path& path);

// Canonical document: fixed key order, two-space indentation.
std::string FormatInstance(const Instance& instance);
void WriteInstanceFile(const Instance& instance,
                       const std::filesystem::path& path);

inline constexpr std::string_view kTrajectoryHeader =
    "epoch,demand,intervention,virtual_stock,surplus_loss,stockout_loss,stock";

// One CSV row per epoch under kTrajectoryHeader. `interventions` holds one
// value per visit; epochs without a visit report 0.
void WriteTrajectory(std::ostream& sink, const Instance& instance,
                     const BaseTrajectory& trajectory,
                     std::span<const Bikes> interventions);

struct IntRange {
  Bikes lower = 0;
  Bikes upper = 0;
};

struct GeneratorConfig {
  Epoch epochs = 1;
  std::size_t visit_count = 0;
  Bikes station_capacity = 0;
  IntRange demand_range;
  IntRange vehicle_capacity_range;
  std::uint64_t seed = 0;
  // Fixed initial stock, or uniform on [0, C] when unset.
  std::optional<Bikes> initial_stock;
};

// Throws InputError on an inconsistent config.
void Validate(const GeneratorConfig& config);

// Deterministic in the config. Draws come from std::mt19937_64 seeded with
// `seed`, mapped to [a, b] by bitmask rejection, in this order: initial stock
// (if uniform), the m demands, the visit epochs by selection sampling over
// 1..m, then each visit's capacity followed by its load on [0, Q].
Instance Generate(const GeneratorConfig& config);

}  // namespace osbrp

#endif  // OSBRP_INSTANCE_IO_H_
