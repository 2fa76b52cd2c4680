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

#include "cli.h"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "osbrp/bench.h"
#include "osbrp/errors.h"
#include "osbrp/global_solver.h"
#include "osbrp/instance_io.h"
#include "osbrp/milp_export.h"
#include "osbrp/model.h"
#include "osbrp/oracle.h"

namespace osbrp {
namespace {

using nlohmann::json;

std::vector<Bikes> ParseIntList(const std::string& text,
                                const std::string& flag) {
  std::vector<Bikes> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    item = first == std::string::npos ? "" : item.substr(first, last - first + 1);
    if (item.empty()) {
      if (text.find_first_not_of(" \t") == std::string::npos) break;
      throw InputError("empty list element", flag);
    }
    Bikes v = 0;
    const auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw InputError("not an integer: '" + item + "'", flag);
    }
    values.push_back(v);
    pos = comma + 1;
  }
  return values;
}

IntRange ParseRange(const std::string& text, const std::string& flag) {
  const std::vector<Bikes> v = ParseIntList(text, flag);
  if (v.size() != 2) throw InputError("expected A,B", flag);
  return {v[0], v[1]};
}

std::string FormatList(const std::vector<Bikes>& values) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ", ";
    out << values[i];
  }
  out << ']';
  return out.str();
}

void WriteTrajectoryFile(const std::string& path, const Instance& inst,
                         const BaseTrajectory& traj,
                         const std::vector<Bikes>& x) {
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path, "--trajectory");
  WriteTrajectory(file, inst, traj, x);
}

void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path, "-o");
  file << text;
  if (!file) throw InputError("write failed: " + path, "-o");
}

struct SolveArgs {
  std::string instance;
  std::string trajectory;
  bool json = false;
  bool uncapacitated = false;
};

int CmdSolve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = ReadInstanceFile(a.instance);

  if (a.uncapacitated) {
    const UncapacitatedSolution sol = SolveUncapacitated(inst);
    const SimulationResult replay = SimulateRelaxed(inst, sol.interventions);
    if (replay.total_loss != sol.loss) {
      err << "internal error: replayed loss " << replay.total_loss
          << " differs from solver loss " << sol.loss << '\n';
      return kExitInternal;
    }
    if (a.json) {
      out << json{{"mode", "uncapacitated"},
                  {"interventions", sol.interventions},
                  {"total_loss", sol.loss}}
                 .dump(2)
          << '\n';
    } else {
      out << "mode: uncapacitated\n"
          << "interventions: " << FormatList(sol.interventions) << '\n'
          << "total_loss: " << sol.loss << '\n';
    }
    if (!a.trajectory.empty()) {
      WriteTrajectoryFile(a.trajectory, inst, replay.trajectory,
                          sol.interventions);
    }
    return kExitOk;
  }

  const Solution sol = Solve(inst);
  const SimulationResult replay = Simulate(inst, sol.interventions);
  if (replay.total_loss != sol.total_loss) {
    err << "internal error: replayed loss " << replay.total_loss
        << " differs from solver loss " << sol.total_loss << '\n';
    return kExitInternal;
  }
  if (a.json) {
    out << json{{"interventions", sol.interventions},
                {"total_loss", sol.total_loss},
                {"null_loss", sol.null_loss},
                {"recovered_loss", sol.recovered_loss},
                {"systemic_pre_visit_loss", sol.systemic_pre_visit_loss},
                {"uncapacitated_loss", sol.uncapacitated_loss}}
               .dump(2)
        << '\n';
  } else {
    out << "interventions: " << FormatList(sol.interventions) << '\n'
        << "total_loss: " << sol.total_loss << '\n'
        << "null_loss: " << sol.null_loss << '\n'
        << "recovered_loss: " << sol.recovered_loss << '\n'
        << "systemic_pre_visit_loss: " << sol.systemic_pre_visit_loss << '\n'
        << "uncapacitated_loss: " << sol.uncapacitated_loss << '\n';
  }
  if (!a.trajectory.empty()) {
    WriteTrajectoryFile(a.trajectory, inst, replay.trajectory,
                        sol.interventions);
  }
  return kExitOk;
}

struct SimulateArgs {
  std::string instance;
  std::string interventions;
  std::string trajectory;
};

int CmdSimulate(const SimulateArgs& a, std::ostream& out) {
  const Instance inst = ReadInstanceFile(a.instance);
  const std::vector<Bikes> x = ParseIntList(a.interventions, "--interventions");
  const SimulationResult sim = Simulate(inst, x);
  Bikes surplus = 0;
  Bikes stockout = 0;
  for (Bikes v : sim.trajectory.surplus_loss) surplus += v;
  for (Bikes v : sim.trajectory.stockout_loss) stockout += v;
  out << "total_loss: " << sim.total_loss << '\n'
      << "surplus_loss: " << surplus << '\n'
      << "stockout_loss: " << stockout << '\n'
      << "final_stock: " << sim.trajectory.stock.back() << '\n';
  if (!a.trajectory.empty()) {
    WriteTrajectoryFile(a.trajectory, inst, sim.trajectory, x);
  }
  return kExitOk;
}

struct OracleArgs {
  std::string instance;
  std::uint64_t limit = 1'000'000;
  bool uncapacitated = false;
};

int CmdOracle(const OracleArgs& a, std::ostream& out) {
  const Instance inst = ReadInstanceFile(a.instance);
  OracleOptions opts;
  opts.limit = a.limit;
  if (a.uncapacitated) opts.bounds = WideBracket(inst);
  const OracleResult oracle = BruteForce(inst, opts);
  const Bikes solver = a.uncapacitated ? SolveUncapacitated(inst).loss
                                       : Solve(inst).total_loss;
  const bool pass = oracle.best_loss == solver;
  out << "mode: " << (a.uncapacitated ? "uncapacitated" : "capacitated")
      << '\n'
      << "search_space_size: " << oracle.search_space_size << '\n'
      << "oracle_best_loss: " << oracle.best_loss << '\n'
      << "solver_total_loss: " << solver << '\n'
      << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kExitOk : kExitInternal;
}

struct GenArgs {
  Epoch epochs = 0;
  std::size_t visits = 0;
  Bikes capacity = 0;
  std::string demand_range;
  std::string vehicle_capacity_range;
  std::string initial_stock = "uniform";
  std::uint64_t seed = 1;
  std::string output;
};

int CmdGen(const GenArgs& a, std::ostream& out) {
  GeneratorConfig c;
  c.epochs = a.epochs;
  c.visit_count = a.visits;
  c.station_capacity = a.capacity;
  c.demand_range = ParseRange(a.demand_range, "--demand-range");
  c.vehicle_capacity_range =
      a.vehicle_capacity_range.empty()
          ? IntRange{a.capacity, a.capacity}
          : ParseRange(a.vehicle_capacity_range, "--vehicle-capacity-range");
  c.seed = a.seed;
  if (a.initial_stock != "uniform") {
    const std::vector<Bikes> v = ParseIntList(a.initial_stock, "--initial-stock");
    if (v.size() != 1) throw InputError("expected N or 'uniform'", "--initial-stock");
    c.initial_stock = v[0];
  }
  WriteOutput(a.output, FormatInstance(Generate(c)), out);
  return kExitOk;
}

struct BenchArgs {
  std::string sizes;
  std::size_t visits = 50;
  int repeats = 5;
  std::uint64_t seed = 1;
};

int CmdBench(const BenchArgs& a, std::ostream& out) {
  BenchConfig c;
  c.sizes = ParseIntList(a.sizes, "--sizes");
  c.visits = a.visits;
  c.repeats = a.repeats;
  c.seed = a.seed;
  const BenchReport report = RunBench(c);
  out << std::left << std::setw(10) << "epochs" << std::setw(8) << "visits"
      << std::setw(14) << "median_s" << std::setw(14) << "min_s"
      << "max_s\n";
  for (const BenchRow& r : report.rows) {
    out << std::setw(10) << r.epochs << std::setw(8) << r.visits
        << std::setw(14) << r.median << std::setw(14) << r.min << r.max
        << '\n';
  }
  out << "ratios:";
  for (double q : report.ratios) out << ' ' << q;
  out << '\n';
  if (!report.ratios.empty()) {
    out << "median_ratio: " << report.MedianRatio() << '\n';
  }
  return kExitOk;
}

struct ExportArgs {
  std::string instance;
  bool relax = false;
  std::string output;
};

int CmdExportLp(const ExportArgs& a, std::ostream& out) {
  const Instance inst = ReadInstanceFile(a.instance);
  WriteOutput(a.output, ExportLp(inst, a.relax), out);
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Optimal loading/unloading plans for one bike-sharing station",
               "osbrp"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute an optimal plan");
  solve_cmd->add_option("instance", solve.instance, "Instance file")->required();
  solve_cmd->add_option("--trajectory", solve.trajectory,
                        "Write the induced trajectory as CSV");
  solve_cmd->add_flag("--json", solve.json, "Machine-readable output");
  solve_cmd->add_flag("--uncapacitated", solve.uncapacitated,
                      "Ignore vehicle load and capacity");

  SimulateArgs simulate;
  auto* sim_cmd = app.add_subcommand("simulate", "Evaluate a given plan");
  sim_cmd->add_option("instance", simulate.instance, "Instance file")->required();
  sim_cmd->add_option("--interventions", simulate.interventions,
                      "Comma-separated interventions, one per visit")
      ->required();
  sim_cmd->add_option("--trajectory", simulate.trajectory,
                      "Write the trajectory as CSV");

  OracleArgs oracle;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Compare the solver with brute force");
  oracle_cmd->add_option("instance", oracle.instance, "Instance file")
      ->required();
  oracle_cmd->add_option("--limit", oracle.limit, "Maximum search space size");
  oracle_cmd->add_flag("--uncapacitated", oracle.uncapacitated,
                       "Use unlimited vehicles and a wide search bracket");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--epochs", gen.epochs, "Horizon length m")->required();
  gen_cmd->add_option("--visits", gen.visits, "Number of visits w")->required();
  gen_cmd->add_option("--capacity", gen.capacity, "Station capacity C")
      ->required();
  gen_cmd->add_option("--demand-range", gen.demand_range, "Demand bounds A,B")
      ->required();
  gen_cmd->add_option("--vehicle-capacity-range", gen.vehicle_capacity_range,
                      "Vehicle capacity bounds A,B (default C,C)");
  gen_cmd->add_option("--initial-stock", gen.initial_stock,
                      "Initial stock N, or 'uniform'");
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed");
  gen_cmd->add_option("-o,--output", gen.output, "Output path, '-' for stdout")
      ->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the solver");
  bench_cmd->add_option("--sizes", bench.sizes, "Horizon sizes S1,S2,...")
      ->required();
  bench_cmd->add_option("--visits", bench.visits, "Visits per instance");
  bench_cmd->add_option("--repeats", bench.repeats, "Timed runs per size");
  bench_cmd->add_option("--seed", bench.seed, "PRNG seed");

  ExportArgs exp;
  auto* exp_cmd = app.add_subcommand("export-lp", "Write the LP model");
  exp_cmd->add_option("instance", exp.instance, "Instance file")->required();
  exp_cmd->add_flag("--relax", exp.relax, "Omit integrality");
  exp_cmd->add_option("-o,--output", exp.output, "Output path, '-' for stdout")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*solve_cmd) return CmdSolve(solve, out, err);
    if (*sim_cmd) return CmdSimulate(simulate, out);
    if (*oracle_cmd) return CmdOracle(oracle, out);
    if (*gen_cmd) return CmdGen(gen, out);
    if (*bench_cmd) return CmdBench(bench, out);
    if (*exp_cmd) return CmdExportLp(exp, out);
  } catch (const SearchSpaceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace osbrp
