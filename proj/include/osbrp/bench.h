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

#ifndef OSBRP_BENCH_H_
#define OSBRP_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "osbrp/model.h"

namespace osbrp {

struct BenchConfig {
  std::vector<Epoch> sizes;  // strictly increasing
  std::size_t visits = 50;
  int repeats = 5;  // >= 3
  std::uint64_t seed = 1;
};

struct BenchRow {
  Epoch epochs = 0;
  std::size_t visits = 0;
  std::vector<double> seconds;  // one per repeat, Solve only
  double median = 0;
  double min = 0;
  double max = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  // median(t[k+1]) / median(t[k]) for consecutive sizes.
  std::vector<double> ratios;

  double MedianRatio() const;
};

// Throws InputError on a bad config.
void Validate(const BenchConfig& config);

// Times Solve on one generated instance per size. Generation happens outside
// the timed region; every repeat solves the same instance.
BenchReport RunBench(const BenchConfig& config);

double Median(std::vector<double> values);

}  // namespace osbrp

#endif  // OSBRP_BENCH_H_
