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

#include "osbrp/bench.h"

#include <algorithm>
#include <chrono>

#include "osbrp/errors.h"
#include "osbrp/global_solver.h"
#include "osbrp/instance_io.h"

namespace osbrp {
namespace {

constexpr Bikes kStationCapacity = 20;

GeneratorConfig BenchInstanceConfig(Epoch m, std::size_t w,
                                    std::uint64_t seed) {
  GeneratorConfig c;
  c.epochs = m;
  c.visit_count = w;
  c.station_capacity = kStationCapacity;
  c.demand_range = {-6, 6};
  c.vehicle_capacity_range = {0, kStationCapacity};
  c.seed = seed;
  return c;
}

}  // namespace

double Median(std::vector<double> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double BenchReport::MedianRatio() const { return Median(ratios); }

void Validate(const BenchConfig& config) {
  if (config.sizes.empty()) throw InputError("at least one size", "sizes");
  for (std::size_t k = 0; k < config.sizes.size(); ++k) {
    if (config.sizes[k] < 1) throw InputError("must be >= 1", "sizes");
    if (k > 0 && config.sizes[k] <= config.sizes[k - 1]) {
      throw InputError("must be strictly increasing", "sizes");
    }
    if (static_cast<Epoch>(config.visits) > config.sizes[k]) {
      throw InputError("more visits than epochs", "visits");
    }
  }
  if (config.repeats < 3) throw InputError("must be >= 3", "repeats");
}

BenchReport RunBench(const BenchConfig& config) {
  Validate(config);
  using Clock = std::chrono::steady_clock;

  BenchReport report;
  for (Epoch m : config.sizes) {
    const Instance inst =
        Generate(BenchInstanceConfig(m, config.visits, config.seed));
    BenchRow row;
    row.epochs = m;
    row.visits = config.visits;

    Bikes sink = Solve(inst).total_loss;  // warm-up
    for (int r = 0; r < config.repeats; ++r) {
      const auto t0 = Clock::now();
      const Solution sol = Solve(inst);
      const auto t1 = Clock::now();
      sink += sol.total_loss;
      row.seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    if (sink < 0) throw ContractError("negative loss");

    row.median = Median(row.seconds);
    row.min = *std::min_element(row.seconds.begin(), row.seconds.end());
    row.max = *std::max_element(row.seconds.begin(), row.seconds.end());
    report.rows.push_back(std::move(row));
  }
  for (std::size_t k = 1; k < report.rows.size(); ++k) {
    report.ratios.push_back(report.rows[k].median / report.rows[k - 1].median);
  }
  return report;
}

}  // namespace osbrp
