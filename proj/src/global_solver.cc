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

#include "osbrp/global_solver.h"

#include <string>

#include "osbrp/errors.h"

namespace osbrp {
namespace {

struct BackwardResult {
  std::vector<Bikes> interventions;
  Bikes loss = 0;  // on [e_1, m]
  std::vector<StagePlan> plans;
};

BackwardResult SolveBackward(const Instance& instance,
                             const BaseTrajectory& base,
                             const std::vector<VehicleBox>& boxes) {
  const auto& visits = instance.visits;
  const std::size_t w = visits.size();
  BackwardResult out;
  out.interventions.assign(w, 0);
  out.plans.reserve(w);

  Bikes delta = 0;
  for (std::size_t i = w; i-- > 0;) {
    const Epoch from = visits[i].epoch;
    const Epoch next = i + 1 < w ? visits[i + 1].epoch : instance.epochs() + 1;
    const Epoch to = delta != 0 ? next : next - 1;

    const LocalResult local = VehicleIntervention(
        base, instance.capacity, from, to, boxes[i], {delta});
    out.interventions[i] = local.x_constrained;

    StagePlan plan;
    plan.stage = i + 1;
    plan.interval_start = from;
    plan.interval_end = to;
    plan.received_delta = delta;
    plan.local = local;
    plan.delegated_delta = local.x_unconstrained - local.x_constrained;
    out.plans.push_back(plan);

    if (i > 0) {
      out.loss += local.loss_unconstrained;
      delta = plan.delegated_delta;
    } else {
      out.loss += local.loss_constrained;
    }
  }
  return out;
}

Bikes PreVisitLoss(const Instance& instance, const BaseTrajectory& base) {
  const Epoch first =
      instance.visits.empty() ? instance.epochs() + 1 : instance.visits[0].epoch;
  return base.LossBetween(1, first - 1);
}

}  // namespace

Solution Solve(const Instance& instance) {
  Validate(instance);
  const BaseTrajectory base = NullTrajectory(instance);

  std::vector<VehicleBox> boxes;
  boxes.reserve(instance.visits.size());
  for (const Visit& v : instance.visits) boxes.push_back(VehicleBox::ForVisit(v));
  const std::vector<VehicleBox> open(instance.visits.size(),
                                     VehicleBox::Unbounded());

  Solution sol;
  sol.null_loss = base.TotalLoss();
  sol.systemic_pre_visit_loss = PreVisitLoss(instance, base);

  BackwardResult capped = SolveBackward(instance, base, boxes);
  const BackwardResult relaxed = SolveBackward(instance, base, open);

  sol.interventions = std::move(capped.interventions);
  sol.total_loss = sol.systemic_pre_visit_loss + capped.loss;
  sol.uncapacitated_loss = sol.systemic_pre_visit_loss + relaxed.loss;
  sol.stage_plans = std::move(capped.plans);
  sol.recovered_loss = sol.null_loss - sol.total_loss;
  return sol;
}

UncapacitatedSolution SolveUncapacitated(const Instance& instance) {
  Validate(instance);
  const BaseTrajectory base = NullTrajectory(instance);
  const std::vector<VehicleBox> open(instance.visits.size(),
                                     VehicleBox::Unbounded());
  BackwardResult relaxed = SolveBackward(instance, base, open);
  return {PreVisitLoss(instance, base) + relaxed.loss,
          std::move(relaxed.interventions)};
}

Bikes PrefixLoss(const Instance& instance, std::span<const Bikes> interventions,
                 std::size_t stage) {
  const std::size_t w = instance.visits.size();
  if (stage < 1 || stage > w) {
    throw RangeError("stage " + std::to_string(stage) + " outside [1, " +
                     std::to_string(w) + "]");
  }
  const SimulationResult sim = Simulate(instance, interventions);
  const Epoch last = stage < w ? instance.visits[stage].epoch - 1
                               : instance.epochs();
  return sim.trajectory.LossBetween(instance.visits[0].epoch, last);
}

}  // namespace osbrp
