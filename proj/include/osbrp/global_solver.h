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

#ifndef OSBRP_GLOBAL_SOLVER_H_
#define OSBRP_GLOBAL_SOLVER_H_

#include <cstddef>
#include <span>
#include <vector>

#include "osbrp/model.h"
#include "osbrp/one_intervention.h"

namespace osbrp {

// What the backward pass did at one visit.
struct StagePlan {
  std::size_t stage = 0;  // 1-based visit index
  Epoch interval_start = 0;
  // Last scanned epoch: e_{i+1} - 1 (m at the last stage), or e_{i+1} itself
  // when the stage carries an augmentation from the stage above.
  Epoch interval_end = 0;
  Bikes received_delta = 0;
  LocalResult local;
  // x_unconstrained - x_constrained, handed to the previous stage.
  Bikes delegated_delta = 0;
};

struct Solution {
  std::vector<Bikes> interventions;
  Bikes total_loss = 0;
  // Losses before the first visit; no intervention can touch them.
  Bikes systemic_pre_visit_loss = 0;
  Bikes null_loss = 0;
  Bikes recovered_loss = 0;
  // Optimum for the same schedule with unlimited vehicles.
  Bikes uncapacitated_loss = 0;
  std::vector<StagePlan> stage_plans;  // last stage first
};

// Globally optimal intervention vector in O(m).
//
// Visits are processed from the last to the first. Each stage solves the
// single-intervention problem on its own interval, fixes its capacitated
// intervention, and hands the part it could not realize to the previous
// stage as a fictitious loss one epoch past that stage's interval.
Solution Solve(const Instance& instance);

struct UncapacitatedSolution {
  Bikes loss = 0;
  std::vector<Bikes> interventions;
};

// Optimum when every vehicle can load or unload without limit.
UncapacitatedSolution SolveUncapacitated(const Instance& instance);

// Loss on epochs [e_1, e_{stage+1} - 1] (or [e_1, m] for the last stage)
// under `interventions`. `stage` is 1-based; throws RangeError outside
// [1, w].
Bikes PrefixLoss(const Instance& instance, std::span<const Bikes> interventions,
                 std::size_t stage);

}  // namespace osbrp

#endif  // OSBRP_GLOBAL_SOLVER_H_
