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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "osbrp/instance_io.h"

namespace osbrp {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "osbrp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const std::string& name) {
  return std::string(OSBRP_TEST_DATA_DIR) + "/" + name;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("osbrp_cli_" + std::to_string(::testing::UnitTest::GetInstance()
                                              ->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Tmp(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST_F(CliTest, SolvePrintsPlan) {
  const CliRun r = Cli({"solve", Data("two_visit.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("total_loss: 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("interventions: [-2, 0]\n"), std::string::npos);
}

TEST_F(CliTest, SolveZeroDemand) {
  const CliRun r = Cli({"solve", Data("zero_demand.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("total_loss: 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("interventions: [0]\n"), std::string::npos);
}

TEST_F(CliTest, SolveRejectsBadStock) {
  const CliRun r = Cli({"solve", Data("bad_stock.json")});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("initial_stock"), std::string::npos);
}

TEST_F(CliTest, SolveMissingFile) {
  EXPECT_EQ(Cli({"solve", Tmp("nope.json")}).code, kExitInput);
}

TEST_F(CliTest, SolveJsonParsesBack) {
  const CliRun r = Cli({"solve", Data("two_visit.json"), "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["interventions"], (std::vector<Bikes>{-2, 0}));
  EXPECT_EQ(doc["total_loss"], 1);
  EXPECT_EQ(doc["null_loss"], 3);
  EXPECT_EQ(doc["recovered_loss"], 2);
  EXPECT_EQ(doc["systemic_pre_visit_loss"], 0);
  EXPECT_EQ(doc["uncapacitated_loss"], 0);
}

TEST_F(CliTest, SolveUncapacitatedAndTrajectory) {
  const CliRun r = Cli({"solve", Data("two_visit.json"), "--uncapacitated",
                        "--trajectory", Tmp("t.csv")});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("interventions: [-2, 1]"), std::string::npos);
  EXPECT_NE(r.out.find("total_loss: 0"), std::string::npos);
  const std::string csv = Slurp(Tmp("t.csv"));
  EXPECT_EQ(csv.rfind(std::string(kTrajectoryHeader) + "\n", 0), 0u);
  EXPECT_NE(csv.find("\n3,-6,1,0,0,0,0\n"), std::string::npos);
}

TEST_F(CliTest, SimulateReportsLoss) {
  const CliRun r = Cli({"simulate", Data("two_visit.json"), "--interventions",
                        "-2,0", "--trajectory", Tmp("t.csv")});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("total_loss: 1\n"), std::string::npos);
  EXPECT_NE(Slurp(Tmp("t.csv")).find("\n1,7,-2,5,0,0,5\n"), std::string::npos);
}

TEST_F(CliTest, SimulateRejectsInfeasible) {
  const CliRun r =
      Cli({"simulate", Data("two_visit.json"), "--interventions", "-2,1"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("interventions[1]"), std::string::npos);
  EXPECT_EQ(Cli({"simulate", Data("two_visit.json"), "--interventions", "1"}).code,
            kExitInput);
  EXPECT_EQ(Cli({"simulate", Data("two_visit.json"), "--interventions", "a,b"}).code,
            kExitInput);
}

TEST_F(CliTest, OracleAgrees) {
  const CliRun r = Cli({"oracle", Data("two_visit.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  const CliRun u = Cli({"oracle", Data("two_visit.json"), "--uncapacitated"});
  EXPECT_EQ(u.code, kExitOk);
  EXPECT_NE(u.out.find("oracle_best_loss: 0"), std::string::npos);
}

TEST_F(CliTest, OracleRespectsLimit) {
  EXPECT_EQ(Cli({"oracle", Data("two_visit.json"), "--limit", "10"}).code,
            kExitLimit);
}

TEST_F(CliTest, GenIsDeterministic) {
  const std::vector<std::string> base = {"gen", "--epochs", "20", "--visits", "4",
                                         "--capacity", "6", "--demand-range",
                                         "-3,3", "--seed", "5", "-o"};
  auto a = base;
  a.push_back(Tmp("a.json"));
  auto b = base;
  b.push_back(Tmp("b.json"));
  ASSERT_EQ(Cli(a).code, kExitOk);
  ASSERT_EQ(Cli(b).code, kExitOk);
  EXPECT_EQ(Slurp(Tmp("a.json")), Slurp(Tmp("b.json")));
  const Instance inst = ReadInstanceFile(Tmp("a.json"));
  EXPECT_EQ(inst.epochs(), 20);
  EXPECT_EQ(inst.visit_count(), 4u);
}

TEST_F(CliTest, GenRejectsBadRange) {
  EXPECT_EQ(Cli({"gen", "--epochs", "5", "--visits", "1", "--capacity", "3",
                 "--demand-range", "4,1", "-o", Tmp("x.json")})
                .code,
            kExitInput);
  EXPECT_EQ(Cli({"gen", "--epochs", "5", "--visits", "9", "--capacity", "3",
                 "--demand-range", "1,4", "-o", Tmp("x.json")})
                .code,
            kExitInput);
}

TEST_F(CliTest, ExportLpMatchesGolden) {
  ASSERT_EQ(Cli({"export-lp", Data("two_visit.json"), "-o", Tmp("m.lp")}).code,
            kExitOk);
  EXPECT_EQ(Slurp(Tmp("m.lp")), Slurp(Data("two_visit.lp")));
  const CliRun relaxed = Cli({"export-lp", Data("two_visit.json"), "--relax", "-o", "-"});
  EXPECT_EQ(relaxed.out.find("Generals"), std::string::npos);
}

TEST_F(CliTest, BenchSingleSize) {
  const CliRun r = Cli({"bench", "--sizes", "2000", "--visits", "5", "--repeats", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("ratios:\n"), std::string::npos);
  EXPECT_EQ(r.out.find("median_ratio"), std::string::npos);
}

TEST_F(CliTest, BenchRejectsUnsortedSizes) {
  EXPECT_EQ(Cli({"bench", "--sizes", "2000,1000"}).code, kExitInput);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}).code, kExitInput);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitInput);
  EXPECT_EQ(Cli({"solve"}).code, kExitInput);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace osbrp
