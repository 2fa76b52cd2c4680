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

#ifndef OSBRP_MODEL_H_
#define OSBRP_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace osbrp {

// Bike counts, stock levels, losses and interventions.
using Bikes = std::int64_t;
// 1-based index into the horizon {1, ..., m}.
using Epoch = std::int64_t;

// A scheduled vehicle stop. The vehicle may unload up to `load` bikes or
// pick up to `vehicle_capacity - load`, so an intervention x is feasible iff
// x lies in [load - vehicle_capacity, load].
struct Visit {
  Epoch epoch = 1;
  Bikes load = 0;
  Bikes vehicle_capacity = 0;

  Bikes min_intervention() const { return load - vehicle_capacity; }
  Bikes max_intervention() const { return load; }

  friend bool operator==(const Visit&, const Visit&) = default;
};

// One station over a discrete horizon. Positive demand adds bikes to the
// station, negative demand removes them.
struct Instance {
  Bikes capacity = 0;
  Bikes initial_stock = 0;
  std::vector<Bikes> demand;
  std::vector<Visit> visits;

  Epoch epochs() const { return static_cast<Epoch>(demand.size()); }
  std::size_t visit_count() const { return visits.size(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Throws InputError naming the offending field.
void Validate(const Instance& instance);

// Per-epoch dynamics. Vectors are indexed 0..m-1 internally; the accessors
// take 1-based epochs.
struct BaseTrajectory {
  Bikes capacity = 0;
  Bikes initial_stock = 0;
  std::vector<Bikes> virtual_stock;
  std::vector<Bikes> surplus_loss;
  std::vector<Bikes> stockout_loss;
  std::vector<Bikes> stock;

  Epoch epochs() const { return static_cast<Epoch>(stock.size()); }

  Bikes stock_at(Epoch h) const { return stock[h - 1]; }
  // Stock carried into epoch h, i.e. s^(h-1); the initial stock for h = 1.
  Bikes stock_before(Epoch h) const {
    return h == 1 ? initial_stock : stock[h - 2];
  }
  Bikes loss_at(Epoch h) const {
    return surplus_loss[h - 1] + stockout_loss[h - 1];
  }
  // Net flow at epoch h including any intervention applied there.
  Bikes inflow_at(Epoch h) const {
    return virtual_stock[h - 1] - stock_before(h);
  }

  // Sum of losses over [from, to]; zero when from > to.
  Bikes LossBetween(Epoch from, Epoch to) const;
  Bikes TotalLoss() const { return LossBetween(1, epochs()); }
};

struct SimulationResult {
  BaseTrajectory trajectory;
  Bikes total_loss = 0;
};

// Evaluates the stock recurrence under the given interventions, one per
// visit. Throws FeasibilityError if some x_i leaves [q_i - Q_i, q_i].
SimulationResult Simulate(const Instance& instance,
                          std::span<const Bikes> interventions);

// As Simulate, but ignores vehicle load and capacity.
SimulationResult SimulateRelaxed(const Instance& instance,
                                 std::span<const Bikes> interventions);

// Trajectory of the all-zero intervention vector.
BaseTrajectory NullTrajectory(const Instance& instance);

struct TrajectoryDiagnostics {
  std::optional<Epoch> first_surplus_epoch;
  std::optional<Epoch> first_stockout_epoch;
  Bikes running_min_stock = 0;
  Bikes running_max_stock = 0;
};

// First-loss epochs and stock extremes over [from, to]. Throws RangeError
// unless 1 <= from <= to <= m.
TrajectoryDiagnostics Diagnose(const BaseTrajectory& trajectory, Epoch from,
                               Epoch to);

}  // namespace osbrp

#endif  // OSBRP_MODEL_H_
