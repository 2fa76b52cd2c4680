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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "osbrp/errors.h"
#include "test_support.h"

namespace osbrp {
namespace {

using ::std::vector;

Instance NoVisits(Bikes cap, Bikes s0, vector<Bikes> d) {
  return Instance{cap, s0, std::move(d), {}};
}

TEST(SimulateTest, ZeroDemandKeepsStock) {
  const SimulationResult r = Simulate(NoVisits(10, 4, {0, 0, 0}), {});
  EXPECT_EQ(r.trajectory.stock, (vector<Bikes>{4, 4, 4}));
  EXPECT_EQ(r.total_loss, 0);
}

TEST(SimulateTest, ClampsBothWays) {
  const SimulationResult r = Simulate(NoVisits(10, 5, {7, -13, 2}), {});
  EXPECT_EQ(r.trajectory.virtual_stock, (vector<Bikes>{12, -3, 2}));
  EXPECT_EQ(r.trajectory.surplus_loss, (vector<Bikes>{2, 0, 0}));
  EXPECT_EQ(r.trajectory.stockout_loss, (vector<Bikes>{0, 3, 0}));
  EXPECT_EQ(r.trajectory.stock, (vector<Bikes>{10, 0, 2}));
  EXPECT_EQ(r.total_loss, 5);
}

TEST(SimulateTest, AppliesInterventionsAtVisitEpochs) {
  const Instance inst{5, 0, {7, 0, -6, 0}, {{1, 0, 10}, {3, 0, 10}}};
  const vector<Bikes> x{-2, 0};
  const SimulationResult r = Simulate(inst, x);
  EXPECT_EQ(r.trajectory.stock, (vector<Bikes>{5, 5, 0, 0}));
  EXPECT_EQ(r.trajectory.stockout_loss, (vector<Bikes>{0, 0, 1, 0}));
  EXPECT_EQ(r.total_loss, 1);
}

TEST(SimulateTest, RejectsInfeasibleIntervention) {
  const Instance inst{5, 0, {7, 0, -6, 0}, {{1, 0, 10}, {3, 0, 10}}};
  const vector<Bikes> x{-2, 1};  // vehicle 2 is empty
  try {
    Simulate(inst, x);
    FAIL() << "expected FeasibilityError";
  } catch (const FeasibilityError& e) {
    EXPECT_EQ(e.visit_index(), 1u);
  }
  EXPECT_NO_THROW(SimulateRelaxed(inst, x));
}

TEST(SimulateTest, RejectsLengthMismatch) {
  const Instance inst{5, 0, {1}, {{1, 0, 10}}};
  EXPECT_THROW(Simulate(inst, {}), InputError);
}

TEST(NullTrajectoryTest, SurplusAtFullStation) {
  const BaseTrajectory t = NullTrajectory(NoVisits(10, 10, {2, 0, 0}));
  EXPECT_EQ(t.surplus_loss, (vector<Bikes>{2, 0, 0}));
  EXPECT_EQ(t.stock, (vector<Bikes>{10, 10, 10}));
}

TEST(NullTrajectoryTest, EmptyThenOverflow) {
  const BaseTrajectory t = NullTrajectory(NoVisits(5, 1, {-1, 6}));
  EXPECT_EQ(t.stock, (vector<Bikes>{0, 5}));
  EXPECT_EQ(t.surplus_loss, (vector<Bikes>{0, 1}));
  EXPECT_EQ(t.stockout_loss, (vector<Bikes>{0, 0}));
}

TEST(NullTrajectoryTest, MatchesZeroInterventionProperty) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    const Instance inst = testing::RandomInstance(rng, {});
    const vector<Bikes> zero(inst.visits.size(), 0);
    const BaseTrajectory a = NullTrajectory(inst);
    const BaseTrajectory b = Simulate(inst, zero).trajectory;
    EXPECT_EQ(a.virtual_stock, b.virtual_stock);
    EXPECT_EQ(a.stock, b.stock);
    EXPECT_EQ(a.surplus_loss, b.surplus_loss);
    EXPECT_EQ(a.stockout_loss, b.stockout_loss);
  }
}

TEST(NullTrajectoryTest, ZeroDemandHasNoLoss) {
  const BaseTrajectory t = NullTrajectory(NoVisits(3, 2, {0, 0, 0, 0}));
  EXPECT_EQ(t.TotalLoss(), 0);
  EXPECT_EQ(t.stock, (vector<Bikes>(4, 2)));
}

TEST(TrajectoryPropertyTest, ClampConservationExclusion) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 500; ++k) {
    const Instance inst = testing::RandomInstance(rng, {});
    vector<Bikes> x;
    for (const Visit& v : inst.visits) {
      x.push_back(testing::Uniform(rng, v.min_intervention(), v.max_intervention()));
    }
    const BaseTrajectory t = Simulate(inst, x).trajectory;
    for (Epoch h = 1; h <= t.epochs(); ++h) {
      const Bikes lp = t.surplus_loss[h - 1];
      const Bikes lm = t.stockout_loss[h - 1];
      const Bikes s = t.stock_at(h);
      EXPECT_EQ(lp * lm, 0);
      EXPECT_GE(s, 0);
      EXPECT_LE(s, inst.capacity);
      EXPECT_EQ(t.virtual_stock[h - 1] - s, lp - lm);
      if (lm > 0) {
        EXPECT_EQ(s, 0);
      }
      if (lp > 0) {
        EXPECT_EQ(s, inst.capacity);
      }
    }
  }
}

TEST(DiagnoseTest, FirstLossesAndExtremes) {
  const BaseTrajectory t = NullTrajectory(NoVisits(10, 5, {7, -13, 2}));
  const TrajectoryDiagnostics d = Diagnose(t, 1, 3);
  EXPECT_EQ(d.first_surplus_epoch, 1);
  EXPECT_EQ(d.first_stockout_epoch, 2);
  EXPECT_EQ(d.running_min_stock, 0);
  EXPECT_EQ(d.running_max_stock, 10);
}

TEST(DiagnoseTest, LossFreeRange) {
  const BaseTrajectory t = NullTrajectory(NoVisits(10, 5, {1, -2, 3}));
  const TrajectoryDiagnostics d = Diagnose(t, 1, 3);
  EXPECT_FALSE(d.first_surplus_epoch);
  EXPECT_FALSE(d.first_stockout_epoch);
  EXPECT_EQ(d.running_min_stock, 4);
  EXPECT_EQ(d.running_max_stock, 7);
}

TEST(DiagnoseTest, SingleEpoch) {
  const BaseTrajectory t = NullTrajectory(NoVisits(10, 5, {7, -13, 2}));
  const TrajectoryDiagnostics d = Diagnose(t, 3, 3);
  EXPECT_EQ(d.running_min_stock, 2);
  EXPECT_EQ(d.running_max_stock, 2);
}

TEST(DiagnoseTest, BadBounds) {
  const BaseTrajectory t = NullTrajectory(NoVisits(10, 5, {7, -13, 2}));
  EXPECT_THROW(Diagnose(t, 0, 2), RangeError);
  EXPECT_THROW(Diagnose(t, 3, 2), RangeError);
  EXPECT_THROW(Diagnose(t, 1, 4), RangeError);
}

TEST(ValidateTest, RejectsBadInstances) {
  EXPECT_THROW(Validate(NoVisits(3, 4, {0})), InputError);
  EXPECT_THROW(Validate(NoVisits(3, 1, {})), InputError);
  Instance dup{5, 0, {1, 1, 1}, {{2, 0, 1}, {2, 0, 1}}};
  try {
    Validate(dup);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.field(), "visits[1].epoch");
  }
  EXPECT_THROW(Validate(Instance{5, 0, {1}, {{2, 0, 1}}}), InputError);
  EXPECT_THROW(Validate(Instance{5, 0, {1}, {{1, 7, 5}}}), InputError);
}

}  // namespace
}  // namespace osbrp
