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

#include "osbrp/one_intervention.h"

#include <algorithm>
#include <string>

#include "osbrp/errors.h"

namespace osbrp {
namespace {

struct EpochState {
  Bikes surplus;
  Bikes stockout;
  Bikes stock;
};

void CheckRange(const BaseTrajectory& base, Bikes capacity, Epoch from,
                Epoch to) {
  if (from < 1 || from > to || to > base.epochs()) {
    throw RangeError("invalid scan range [" + std::to_string(from) + ", " +
                     std::to_string(to) + "] for horizon of " +
                     std::to_string(base.epochs()));
  }
  if (base.capacity != capacity) {
    throw ContractError("base trajectory built for capacity " +
                        std::to_string(base.capacity) + ", scan asked for " +
                        std::to_string(capacity));
  }
}

// Null-intervention state at h, with the augmentation applied at `to`.
EpochState StateAt(const BaseTrajectory& base, Bikes capacity, Epoch h,
                   Epoch to, AugmentationOverride aug) {
  if (h == to && aug.delta > 0) return {0, aug.delta, 0};
  if (h == to && aug.delta < 0) return {-aug.delta, 0, capacity};
  return {base.surplus_loss[h - 1], base.stockout_loss[h - 1],
          base.stock[h - 1]};
}

// Net flow at h seen by the scan; the augmented epoch carries the fictitious
// demand that makes the null trajectory lose exactly |delta| there.
Bikes InflowAt(const BaseTrajectory& base, Bikes capacity, Epoch h, Epoch to,
               AugmentationOverride aug) {
  if (h == to && aug.delta > 0) return -base.stock_before(h) - aug.delta;
  if (h == to && aug.delta < 0) {
    return capacity - base.stock_before(h) - aug.delta;
  }
  return base.inflow_at(h);
}

// Forward scan; `on_step` sees each epoch after its update.
template <typename OnStep>
void Scan(const BaseTrajectory& base, Bikes capacity, Epoch from, Epoch to,
          AugmentationOverride augmentation, OnStep&& on_step) {
  CheckRange(base, capacity, from, to);

  ScanStep step;
  // Lowest/highest stock seen so far under the current x; unset means
  // unbounded, so the first epoch's loss is always fully recoverable.
  std::optional<Bikes> min_stock;
  std::optional<Bikes> max_stock;

  for (Epoch h = from; h <= to; ++h) {
    const EpochState st = StateAt(base, capacity, h, to, augmentation);
    const Bikes down =
        min_stock ? std::min(st.surplus, *min_stock) : st.surplus;
    const Bikes up =
        max_stock ? std::min(st.stockout, capacity - *max_stock) : st.stockout;

    step.epoch = h;
    step.downshift = down;
    step.upshift = up;
    step.x += up - down;
    step.loss += (st.surplus - down) + (st.stockout - up);

    min_stock = min_stock ? std::min(*min_stock - down, st.stock) : st.stock;
    max_stock = max_stock ? std::max(*max_stock + up, st.stock) : st.stock;
    on_step(step);
  }
}

}  // namespace

LocalResult VehicleIntervention(const BaseTrajectory& base, Bikes capacity,
                                Epoch from, Epoch to, const VehicleBox& box,
                                AugmentationOverride augmentation) {
  Bikes x = 0;
  Bikes loss = 0;
  Scan(base, capacity, from, to, augmentation, [&](const ScanStep& s) {
    x = s.x;
    loss = s.loss;
  });

  LocalResult r;
  r.x_unconstrained = x;
  r.loss_unconstrained = loss;
  r.x_constrained = box.Clamp(x);
  r.loss_constrained = loss + (x > r.x_constrained ? x - r.x_constrained
                                                   : r.x_constrained - x);
  return r;
}

std::vector<ScanStep> TraceVehicleIntervention(
    const BaseTrajectory& base, Bikes capacity, Epoch from, Epoch to,
    AugmentationOverride augmentation) {
  std::vector<ScanStep> steps;
  Scan(base, capacity, from, to, augmentation,
       [&](const ScanStep& s) { steps.push_back(s); });
  return steps;
}

OptimalIntervals ComputeOptimalIntervals(const BaseTrajectory& base,
                                         Bikes capacity, Epoch from, Epoch to,
                                         const VehicleBox& box,
                                         const LocalResult& local,
                                         AugmentationOverride augmentation) {
  CheckRange(base, capacity, from, to);

  // Replay the range under x_unconstrained.
  Bikes prev = base.stock_before(from);
  Bikes loss = 0;
  Bikes lowest = capacity;
  Bikes highest = 0;
  for (Epoch h = from; h <= to; ++h) {
    Bikes virt = prev + InflowAt(base, capacity, h, to, augmentation);
    if (h == from) virt += local.x_unconstrained;
    const Bikes surplus = std::max<Bikes>(0, virt - capacity);
    const Bikes stockout = std::max<Bikes>(0, -virt);
    prev = virt - surplus + stockout;
    loss += surplus + stockout;
    lowest = std::min(lowest, prev);
    highest = std::max(highest, prev);
  }
  if (loss != local.loss_unconstrained) {
    throw ContractError("local result does not match range: replayed loss " +
                        std::to_string(loss) + " vs reported " +
                        std::to_string(local.loss_unconstrained));
  }

  OptimalIntervals out;
  const Bikes x = local.x_unconstrained;
  if (local.loss_unconstrained > 0) {
    out.uncapacitated = {x, x};
  } else {
    out.uncapacitated = {x - lowest, x + capacity - highest};
  }

  const OptimalInterval& u = out.uncapacitated;
  if (box.upper && u.lower > *box.upper) {
    out.capacitated = {*box.upper, *box.upper};
  } else if (box.lower && u.upper < *box.lower) {
    out.capacitated = {*box.lower, *box.lower};
  } else {
    out.capacitated = {box.lower ? std::max(u.lower, *box.lower) : u.lower,
                       box.upper ? std::min(u.upper, *box.upper) : u.upper};
  }
  return out;
}

}  // namespace osbrp
