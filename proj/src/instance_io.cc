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

#include "osbrp/instance_io.h"

#include <bit>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "osbrp/errors.h"

namespace osbrp {
namespace {

using nlohmann::json;

Bikes ReadInt(const json& node, const std::string& path, Bikes min_value) {
  if (!node.is_number_integer()) {
    throw InputError("expected an integer", path);
  }
  if (node.is_number_unsigned() &&
      node.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<Bikes>::max())) {
    throw InputError("integer out of range", path);
  }
  const Bikes v = node.get<Bikes>();
  if (v < min_value) {
    throw InputError("must be >= " + std::to_string(min_value), path);
  }
  return v;
}

const json& Require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError("missing required field", path + key);
  return *it;
}

void RejectUnknown(const json& obj, std::initializer_list<const char*> keys,
                   const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) throw InputError("unknown field", path + it.key());
  }
}

// Uniform integer on [lo, hi] from a 64-bit engine: draw, mask to the
// smallest covering power of two, reject values past the span.
class UniformDraw {
 public:
  explicit UniformDraw(std::uint64_t seed) : engine_(seed) {}

  Bikes operator()(Bikes lo, Bikes hi) {
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == 0) return lo;
    const std::uint64_t mask =
        span == ~std::uint64_t{0}
            ? span
            : std::bit_ceil(span + 1) - 1;
    std::uint64_t r;
    do {
      r = engine_() & mask;
    } while (r > span);
    return static_cast<Bikes>(static_cast<std::uint64_t>(lo) + r);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

Instance ParseInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("document must be a JSON object");
  RejectUnknown(doc, {"capacity", "initial_stock", "demand", "visits"}, "");

  Instance inst;
  inst.capacity = ReadInt(Require(doc, "capacity", ""), "capacity", 0);
  inst.initial_stock =
      ReadInt(Require(doc, "initial_stock", ""), "initial_stock", 0);

  const json& demand = Require(doc, "demand", "");
  if (!demand.is_array()) throw InputError("expected an array", "demand");
  for (std::size_t h = 0; h < demand.size(); ++h) {
    inst.demand.push_back(ReadInt(demand[h],
                                  "demand[" + std::to_string(h) + "]",
                                  std::numeric_limits<Bikes>::min()));
  }

  const json& visits = Require(doc, "visits", "");
  if (!visits.is_array()) throw InputError("expected an array", "visits");
  for (std::size_t i = 0; i < visits.size(); ++i) {
    const std::string path = "visits[" + std::to_string(i) + "].";
    const json& v = visits[i];
    if (!v.is_object()) {
      throw InputError("expected an object", "visits[" + std::to_string(i) + "]");
    }
    RejectUnknown(v, {"epoch", "load", "capacity"}, path);
    Visit visit;
    visit.epoch = ReadInt(Require(v, "epoch", path), path + "epoch", 1);
    visit.load = ReadInt(Require(v, "load", path), path + "load", 0);
    visit.vehicle_capacity =
        ReadInt(Require(v, "capacity", path), path + "capacity", 0);
    inst.visits.push_back(visit);
  }

  Validate(inst);
  return inst;
}

Instance ReadInstanceFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseInstance(buf.str());
}

std::string FormatInstance(const Instance& instance) {
  std::ostringstream out;
  out << "{\n  \"capacity\": " << instance.capacity
      << ",\n  \"initial_stock\": " << instance.initial_stock
      << ",\n  \"demand\": " << json(instance.demand).dump()
      << ",\n  \"visits\": [";
  for (std::size_t i = 0; i < instance.visits.size(); ++i) {
    const Visit& v = instance.visits[i];
    out << (i == 0 ? "\n" : ",\n") << "    {\"epoch\": " << v.epoch
        << ", \"load\": " << v.load << ", \"capacity\": " << v.vehicle_capacity
        << '}';
  }
  out << (instance.visits.empty() ? "]" : "\n  ]") << "\n}\n";
  return out.str();
}

void WriteInstanceFile(const Instance& instance,
                       const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << FormatInstance(instance);
  if (!out) throw InputError("write failed: " + path.string());
}

void WriteTrajectory(std::ostream& sink, const Instance& instance,
                     const BaseTrajectory& trajectory,
                     std::span<const Bikes> interventions) {
  if (interventions.size() != instance.visits.size()) {
    throw InputError("one intervention per visit required", "interventions");
  }
  sink << kTrajectoryHeader << '\n';
  std::size_t next = 0;
  for (Epoch h = 1; h <= trajectory.epochs(); ++h) {
    Bikes x = 0;
    if (next < instance.visits.size() && instance.visits[next].epoch == h) {
      x = interventions[next++];
    }
    sink << h << ',' << instance.demand[h - 1] << ',' << x << ','
         << trajectory.virtual_stock[h - 1] << ','
         << trajectory.surplus_loss[h - 1] << ','
         << trajectory.stockout_loss[h - 1] << ',' << trajectory.stock[h - 1]
         << '\n';
  }
  if (!sink) throw std::runtime_error("trajectory write failed");
}

void Validate(const GeneratorConfig& c) {
  if (c.epochs < 1) throw InputError("must be >= 1", "epochs");
  if (static_cast<Epoch>(c.visit_count) > c.epochs) {
    throw InputError("cannot exceed epochs", "visit_count");
  }
  if (c.station_capacity < 0) {
    throw InputError("must be >= 0", "station_capacity");
  }
  if (c.demand_range.lower > c.demand_range.upper) {
    throw InputError("lower bound exceeds upper bound", "demand_range");
  }
  if (c.vehicle_capacity_range.lower < 0 ||
      c.vehicle_capacity_range.lower > c.vehicle_capacity_range.upper) {
    throw InputError("need 0 <= lower <= upper", "vehicle_capacity_range");
  }
  if (c.initial_stock &&
      (*c.initial_stock < 0 || *c.initial_stock > c.station_capacity)) {
    throw InputError("must lie in [0, station_capacity]", "initial_stock");
  }
}

Instance Generate(const GeneratorConfig& config) {
  Validate(config);
  UniformDraw draw(config.seed);

  Instance inst;
  inst.capacity = config.station_capacity;
  inst.initial_stock = config.initial_stock
                           ? *config.initial_stock
                           : draw(0, config.station_capacity);
  inst.demand.resize(config.epochs);
  for (Bikes& d : inst.demand) {
    d = draw(config.demand_range.lower, config.demand_range.upper);
  }

  // Selection sampling: keep epoch h with probability needed / remaining.
  Epoch needed = static_cast<Epoch>(config.visit_count);
  for (Epoch h = 1; h <= config.epochs && needed > 0; ++h) {
    const Epoch remaining = config.epochs - h + 1;
    if (draw(0, remaining - 1) < needed) {
      inst.visits.push_back({h, 0, 0});
      --needed;
    }
  }
  for (Visit& v : inst.visits) {
    v.vehicle_capacity = draw(config.vehicle_capacity_range.lower,
                              config.vehicle_capacity_range.upper);
    v.load = draw(0, v.vehicle_capacity);
  }
  return inst;
}

}  // namespace osbrp
