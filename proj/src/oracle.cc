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

#include "osbrp/oracle.h"

#include <cstdlib>
#include <limits>

#include "osbrp/errors.h"

namespace osbrp {

std::uint64_t SearchSpaceSize(const std::vector<InterventionRange>& box) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t size = 1;
  for (const InterventionRange& r : box) {
    const std::uint64_t wd = r.width();
    if (wd == 0) return 0;
    if (size > kMax / wd) return kMax;
    size *= wd;
  }
  return size;
}

OracleResult BruteForce(const Instance& instance,
                        const OracleOptions& options) {
  Validate(instance);
  const std::size_t w = instance.visits.size();

  std::vector<InterventionRange> box;
  if (options.bounds) {
    box = *options.bounds;
    if (box.size() != w) {
      throw InputError("expected " + std::to_string(w) + " ranges, got " +
                           std::to_string(box.size()),
                       "bounds");
    }
  } else {
    for (const Visit& v : instance.visits) {
      box.push_back({v.min_intervention(), v.max_intervention()});
    }
  }

  OracleResult out;
  out.search_space_size = SearchSpaceSize(box);
  if (out.search_space_size > options.limit) {
    throw SearchSpaceError(out.search_space_size, options.limit);
  }
  if (out.search_space_size == 0) {
    throw InputError("empty search box", "bounds");
  }

  std::vector<Bikes> x(w);
  for (std::size_t i = 0; i < w; ++i) x[i] = box[i].lower;

  bool first = true;
  // Odometer over the box, last coordinate fastest.
  while (true) {
    const Bikes loss = SimulateRelaxed(instance, x).total_loss;
    if (first || loss < out.best_loss) {
      first = false;
      out.best_loss = loss;
      out.best_vectors.clear();
      out.best_vectors_truncated = false;
    }
    if (loss == out.best_loss) {
      if (out.best_vectors.size() < options.max_vectors) {
        out.best_vectors.push_back(x);
      } else {
        out.best_vectors_truncated = true;
      }
    }

    std::size_t k = w;
    while (k > 0) {
      --k;
      if (x[k] < box[k].upper) {
        ++x[k];
        break;
      }
      x[k] = box[k].lower;
      if (k == 0) return out;
    }
    if (w == 0) return out;
  }
}

std::vector<InterventionRange> WideBracket(const Instance& instance) {
  Bikes reach = instance.capacity;
  for (Bikes d : instance.demand) reach += std::llabs(d);
  return std::vector<InterventionRange>(instance.visits.size(),
                                        {-reach, reach});
}

std::vector<SweepPoint> Sweep1D(const Instance& instance,
                                InterventionRange bracket) {
  if (instance.visits.size() != 1) {
    throw ContractError("Sweep1D needs exactly one visit, got " +
                        std::to_string(instance.visits.size()));
  }
  if (bracket.lower > bracket.upper) {
    throw RangeError("empty sweep bracket");
  }
  const Epoch start = instance.visits[0].epoch;
  std::vector<SweepPoint> out;
  out.reserve(bracket.width());
  for (Bikes x = bracket.lower; x <= bracket.upper; ++x) {
    const Bikes xs[1] = {x};
    const SimulationResult sim = SimulateRelaxed(instance, xs);
    out.push_back({x, sim.trajectory.LossBetween(start, instance.epochs())});
  }
  return out;
}

}  // namespace osbrp
