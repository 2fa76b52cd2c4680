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

#ifndef OSBRP_ONE_INTERVENTION_H_
#define OSBRP_ONE_INTERVENTION_H_

#include <optional>
#include <vector>

#include "osbrp/model.h"

namespace osbrp {

// Feasible intervention window of one vehicle. A missing side is unbounded.
struct VehicleBox {
  std::optional<Bikes> lower;
  std::optional<Bikes> upper;

  static VehicleBox ForVisit(const Visit& v) {
    return {v.min_intervention(), v.max_intervention()};
  }
  static VehicleBox ForLoad(Bikes load, Bikes vehicle_capacity) {
    return {load - vehicle_capacity, load};
  }
  static VehicleBox Unbounded() { return {}; }

  // Nearest point of the window to x.
  Bikes Clamp(Bikes x) const {
    if (lower && x < *lower) return *lower;
    if (upper && x > *upper) return *upper;
    return x;
  }
};

// Outcome of the single-intervention scan. The unconstrained pair ignores
// the vehicle window; both interventions are the optimum of least modulus.
struct LocalResult {
  Bikes x_unconstrained = 0;
  Bikes loss_unconstrained = 0;
  Bikes x_constrained = 0;
  Bikes loss_constrained = 0;

  friend bool operator==(const LocalResult&, const LocalResult&) = default;
};

// Closed integer interval [lower, upper] of optimal interventions.
struct OptimalInterval {
  Bikes lower = 0;
  Bikes upper = 0;

  bool contains(Bikes x) const { return lower <= x && x <= upper; }
  Bikes distance(Bikes x) const {
    return x < lower ? lower - x : (x > upper ? x - upper : 0);
  }

  friend bool operator==(const OptimalInterval&,
                         const OptimalInterval&) = default;
};

struct OptimalIntervals {
  OptimalInterval uncapacitated;
  OptimalInterval capacitated;
};

// Fictitious loss placed on the last scanned epoch. delta > 0 acts as a
// stockout of delta bikes (stock 0), delta < 0 as a surplus of -delta bikes
// (stock C). Zero leaves the base trajectory untouched.
struct AugmentationOverride {
  Bikes delta = 0;
};

// Optimal single intervention at epoch `from` for the losses on [from, to].
//
// `base` must be the null-intervention trajectory of the instance; it is only
// read. One forward pass over [from, to] tracks the lowest and highest stock
// reachable after the shifts applied so far and recovers each loss as far as
// those extremes allow. The scan is O(to - from).
//
// Throws RangeError for a bad epoch range and ContractError if `base` does
// not match `capacity`.
LocalResult VehicleIntervention(const BaseTrajectory& base, Bikes capacity,
                                Epoch from, Epoch to, const VehicleBox& box,
                                AugmentationOverride augmentation = {});

// Per-epoch record of the scan: the shifts applied at `epoch` and the
// running intervention and loss after them.
struct ScanStep {
  Epoch epoch = 0;
  Bikes downshift = 0;
  Bikes upshift = 0;
  Bikes x = 0;
  Bikes loss = 0;
};

// Same scan as VehicleIntervention, returning every step.
std::vector<ScanStep> TraceVehicleIntervention(
    const BaseTrajectory& base, Bikes capacity, Epoch from, Epoch to,
    AugmentationOverride augmentation = {});

// Set of all optimal interventions for the same scan, uncapacitated and
// clamped to `box`. Throws ContractError when `local` was not produced by
// VehicleIntervention on this range.
OptimalIntervals ComputeOptimalIntervals(const BaseTrajectory& base,
                                         Bikes capacity, Epoch from, Epoch to,
                                         const VehicleBox& box,
                                         const LocalResult& local,
                                         AugmentationOverride augmentation = {});

}  // namespace osbrp

#endif  // OSBRP_ONE_INTERVENTION_H_
