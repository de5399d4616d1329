// Copyright 2026 The mvthresh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "test_support.hpp"

namespace mvthresh {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture() { return testing::source_path("data/running_example.json"); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliFileTest : public ::testing::Test {
 protected:
  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("mvthresh_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::filesystem::path dir_;
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliTest, ValidateFixture) {
  const auto r = run({"validate", fixture()});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "ok: 4 components, levels 0..3, 81 states\n");
}

TEST_F(CliFileTest, ValidateReportsViolations) {
  const auto path = write("bad.json", R"({"components": [{"max_state": 2, "weight": 1},
    {"max_state": 2, "weight": 1}], "thresholds": [0, 4, 2]})");
  const auto r = run({"validate", path});
  EXPECT_EQ(r.code, cli::kExitFailure);
  EXPECT_TRUE(contains(r.out, "NonIncreasingThresholds")) << r.out;
}

TEST_F(CliFileTest, MissingThresholdsIsAUsageError) {
  const auto path = write("missing.json", R"({"components": [{"max_state": 2, "weight": 1}]})");
  const auto r = run({"validate", path});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_TRUE(contains(r.err, "missing required key \"thresholds\"")) << r.err;
}

TEST(CliTest, AnalyzeLevel3Success) {
  const auto r = run({"analyze", fixture(), "--level", "3", "--perspective", "success"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "MUVs (10, level 3)"));
  EXPECT_TRUE(contains(r.out, "[2,2,2,0] x4"));
  EXPECT_TRUE(contains(r.out, "[2,2,1,1] x6"));
  EXPECT_TRUE(contains(r.out, "minimal SOP (10 terms)"));
  EXPECT_TRUE(contains(r.out, "PRE via shelling (10 terms)"));
  EXPECT_TRUE(contains(r.out, "shellable: true"));
  EXPECT_TRUE(contains(r.out, "oracle: equivalent (15 cells)"));
}

TEST(CliTest, AnalyzeLevel1Failure) {
  const auto r = run({"analyze", fixture(), "--level", "1", "--perspective", "failure", "--ascii"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "MLVs (4, level 0)"));
  EXPECT_TRUE(contains(r.out, "PRE via shelling (4 terms)"));
  EXPECT_TRUE(contains(r.out, "  + X1{0} X2{1} X3{0} X4{0}"));
  EXPECT_FALSE(contains(r.out, "∨"));
}

TEST(CliTest, AnalyzeUniformProbabilities) {
  const auto r = run({"analyze", fixture(), "--dist", "uniform"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "0      5/81    1        5/81\n"));
  EXPECT_TRUE(contains(r.out, "1      26/81   76/81    31/81\n"));
  EXPECT_TRUE(contains(r.out, "2      35/81   50/81    22/27\n"));
  EXPECT_TRUE(contains(r.out, "3      5/27    5/27     1\n"));
  EXPECT_TRUE(contains(r.out, "sum of P(S=j): 1\n"));
  EXPECT_TRUE(contains(r.out, "oracle agreement: yes"));
}

TEST(CliTest, AnalyzeOtherMethodsAndFloat) {
  for (const char* method : {"reflection", "expansion"}) {
    const auto r = run({"analyze", fixture(), "--level", "2", "--method", method, "--dist", "file"});
    EXPECT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_TRUE(contains(r.out, "oracle agreement: yes")) << method;
  }
  const auto r = run({"analyze", fixture(), "--level", "2", "--dist", "uniform", "--float"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "oracle agreement: yes"));
}

TEST(CliTest, AnalyzeRejectsBadLevel) {
  EXPECT_EQ(run({"analyze", fixture(), "--level", "4"}).code, cli::kExitFailure);
  EXPECT_EQ(run({"analyze", fixture(), "--perspective", "sideways"}).code, cli::kExitUsage);
}

TEST(CliTest, MapReproducesStructureFixture) {
  const auto r = run({"map", fixture()});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out, read_file(testing::data_path("structure_map.txt")));
  const auto sums = run({"map", fixture(), "--content", "sum"});
  EXPECT_EQ(sums.out, read_file(testing::data_path("sum_map.txt")));
}

TEST(CliTest, MapWithMlvOverlay) {
  const auto r = run({"map", fixture(), "--level", "2", "--overlay", "mlv"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "S <= 2");
  std::size_t marks = 0;
  for (char c : r.out) marks += c == '*';
  EXPECT_EQ(marks, 17u);  // 16 cells plus the legend
  EXPECT_TRUE(contains(r.out, "* : MLV, level 2"));
}

TEST(CliTest, MapCoverOverlay) {
  const auto r = run({"map", fixture(), "--level", "1", "--perspective", "failure", "--overlay", "cover"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "a : X1{0,1} X2{0} X3{0} X4{0} (2 cells)"));
  EXPECT_TRUE(contains(r.out, "d : X1{0} X2{0} X3{0} X4{1} (1 cell)"));
}

TEST(CliTest, MapCsv) {
  const auto r = run({"map", fixture(), "--format", "csv"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "X3 X4 \\ X1 X2,0:0,0:1,0:2,1:0,1:1,1:2,2:0,2:1,2:2");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 10);
}

TEST(CliTest, VerifyFixture) {
  const auto r = run({"verify", fixture()});
  EXPECT_EQ(r.code, cli::kExitOk) << r.out;
  EXPECT_TRUE(contains(r.out, " passed, 0 failed\n"));
  EXPECT_FALSE(contains(r.out, "[FAIL]"));
}

TEST_F(CliFileTest, VerifyAcceptsAnyConsistentSystem) {
  const auto path = write("shifted.json", R"({"components": [
    {"max_state": 2, "weight": 1}, {"max_state": 2, "weight": 1},
    {"max_state": 2, "weight": 1}, {"max_state": 2, "weight": 1}],
    "thresholds": [0, 3, 4, 6]})");
  const auto r = run({"verify", path});
  EXPECT_EQ(r.code, cli::kExitOk) << r.out;
}

TEST_F(CliFileTest, HugeStateSpaceIsRefused) {
  std::string components;
  for (int k = 0; k < 8; ++k) components += std::string(k ? "," : "") + R"({"max_state": 9, "weight": 1})";
  const auto path = write("huge.json", R"({"components": [)" + components + R"(], "thresholds": [0, 1]})");
  for (const char* cmd : {"verify", "analyze", "map"}) {
    const auto r = run({cmd, path});
    EXPECT_EQ(r.code, cli::kExitFailure) << cmd;
    EXPECT_TRUE(contains(r.err, "100000000 states exceeds the cap of 10000000")) << r.err;
  }
  EXPECT_EQ(run({"validate", path}).code, cli::kExitOk);
}

TEST(CliTest, StateCapOptionAndEnvironment) {
  EXPECT_EQ(run({"verify", fixture(), "--state-cap", "80"}).code, cli::kExitFailure);
  ::setenv("MVTHRESH_STATE_CAP", "80", 1);
  const auto r = run({"analyze", fixture(), "--level", "3"});
  ::unsetenv("MVTHRESH_STATE_CAP");
  EXPECT_EQ(r.code, cli::kExitFailure);
  EXPECT_TRUE(contains(r.err, "exceeds the cap of 80")) << r.err;
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bogus", fixture()}).code, cli::kExitUsage);
  EXPECT_EQ(run({"map"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"map", fixture(), "--format", "svg"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"validate", "/nonexistent.json"}).code, cli::kExitUsage);
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, cli::kExitOk);
  EXPECT_TRUE(contains(help.out, "verify"));
}

}  // namespace
}  // namespace mvthresh
