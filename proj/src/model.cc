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

#include "osbrp/model.h"

#include <algorithm>
#include <string>

#include "osbrp/errors.h"

namespace osbrp {
namespace {

std::string VisitField(std::size_t i, const char* name) {
  return "visits[" + std::to_string(i) + "]." + name;
}

SimulationResult Run(const Instance& instance,
                     std::span<const Bikes> interventions, bool check_bounds) {
  Validate(instance);
  const auto& visits = instance.visits;
  if (interventions.size() != visits.size()) {
    throw InputError("expected " + std::to_string(visits.size()) +
                         " values, got " + std::to_string(interventions.size()),
                     "interventions");
  }
  if (check_bounds) {
    for (std::size_t i = 0; i < visits.size(); ++i) {
      const Bikes x = interventions[i];
      if (x < visits[i].min_intervention() || x > visits[i].max_intervention()) {
        throw FeasibilityError(
            i, "intervention " + std::to_string(x) + " outside [" +
                   std::to_string(visits[i].min_intervention()) + ", " +
                   std::to_string(visits[i].max_intervention()) + "]");
      }
    }
  }

  const Bikes cap = instance.capacity;
  const std::size_t m = instance.demand.size();
  SimulationResult result;
  BaseTrajectory& t = result.trajectory;
  t.capacity = cap;
  t.initial_stock = instance.initial_stock;
  t.virtual_stock.resize(m);
  t.surplus_loss.resize(m);
  t.stockout_loss.resize(m);
  t.stock.resize(m);

  std::size_t next_visit = 0;
  Bikes prev = instance.initial_stock;
  for (std::size_t k = 0; k < m; ++k) {
    Bikes virt = prev + instance.demand[k];
    if (next_visit < visits.size() &&
        visits[next_visit].epoch == static_cast<Epoch>(k + 1)) {
      virt += interventions[next_visit++];
    }
    const Bikes surplus = std::max<Bikes>(0, virt - cap);
    const Bikes stockout = std::max<Bikes>(0, -virt);
    t.virtual_stock[k] = virt;
    t.surplus_loss[k] = surplus;
    t.stockout_loss[k] = stockout;
    t.stock[k] = prev = virt - surplus + stockout;
    result.total_loss += surplus + stockout;
  }
  return result;
}

}  // namespace

void Validate(const Instance& instance) {
  if (instance.capacity < 0) throw InputError("must be >= 0", "capacity");
  if (instance.initial_stock < 0) {
    throw InputError("must be >= 0", "initial_stock");
  }
  if (instance.initial_stock > instance.capacity) {
    throw InputError("exceeds station capacity " +
                         std::to_string(instance.capacity),
                     "initial_stock");
  }
  if (instance.demand.empty()) {
    throw InputError("horizon must have at least one epoch", "demand");
  }
  const Epoch m = instance.epochs();
  for (std::size_t i = 0; i < instance.visits.size(); ++i) {
    const Visit& v = instance.visits[i];
    if (v.epoch < 1 || v.epoch > m) {
      throw InputError("must lie in [1, " + std::to_string(m) + "]",
                       VisitField(i, "epoch"));
    }
    if (i > 0 && v.epoch <= instance.visits[i - 1].epoch) {
      throw InputError("visit epochs must be strictly increasing",
                       VisitField(i, "epoch"));
    }
    if (v.vehicle_capacity < 0) {
      throw InputError("must be >= 0", VisitField(i, "capacity"));
    }
    if (v.load < 0 || v.load > v.vehicle_capacity) {
      throw InputError("load q must satisfy 0 <= q <= Q = " +
                           std::to_string(v.vehicle_capacity),
                       VisitField(i, "load"));
    }
  }
}

Bikes BaseTrajectory::LossBetween(Epoch from, Epoch to) const {
  Bikes total = 0;
  for (Epoch h = std::max<Epoch>(from, 1); h <= std::min(to, epochs()); ++h) {
    total += loss_at(h);
  }
  return total;
}

SimulationResult Simulate(const Instance& instance,
                          std::span<const Bikes> interventions) {
  return Run(instance, interventions, /*check_bounds=*/true);
}

SimulationResult SimulateRelaxed(const Instance& instance,
                                 std::span<const Bikes> interventions) {
  return Run(instance, interventions, /*check_bounds=*/false);
}

BaseTrajectory NullTrajectory(const Instance& instance) {
  const std::vector<Bikes> zero(instance.visits.size(), 0);
  return Run(instance, zero, /*check_bounds=*/false).trajectory;
}

TrajectoryDiagnostics Diagnose(const BaseTrajectory& trajectory, Epoch from,
                               Epoch to) {
  if (from < 1 || from > to || to > trajectory.epochs()) {
    throw RangeError("invalid epoch range [" + std::to_string(from) + ", " +
                     std::to_string(to) + "] for horizon of " +
                     std::to_string(trajectory.epochs()));
  }
  TrajectoryDiagnostics out;
  out.running_min_stock = out.running_max_stock = trajectory.stock_at(from);
  for (Epoch h = from; h <= to; ++h) {
    if (!out.first_surplus_epoch && trajectory.surplus_loss[h - 1] > 0) {
      out.first_surplus_epoch = h;
    }
    if (!out.first_stockout_epoch && trajectory.stockout_loss[h - 1] > 0) {
      out.first_stockout_epoch = h;
    }
    out.running_min_stock = std::min(out.running_min_stock, trajectory.stock_at(h));
    out.running_max_stock = std::max(out.running_max_stock, trajectory.stock_at(h));
  }
  return out;
}

}  // namespace osbrp
