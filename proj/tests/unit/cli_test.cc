// Copyright 2026 The arbcolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "app.h"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arbcolor/edge_list_io.h"
#include "arbcolor/generators.h"

namespace arbcolor {
namespace {

namespace fs = std::filesystem;

struct Cli {
  int code = -1;
  std::string out;
  std::string err;
};

Cli call(std::vector<std::string> args) {
  args.insert(args.begin(), "arbcolor");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Cli c;
  c.code = app::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  c.out = out.str();
  c.err = err.str();
  return c;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("arbcolor_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  fs::path dir_;
};

TEST_F(CliTest, GenerateRoundTrip) {
  auto c = call({"generate", "--graph", "forest-union:n=200,alpha=3,seed=4", "--out", path("g.txt")});
  ASSERT_EQ(c.code, app::kExitOk) << c.err;
  auto read = read_edge_list_file(path("g.txt"));
  auto direct = union_of_random_forests(200, 3, 4);
  EXPECT_EQ(read.n(), direct.n());
  EXPECT_EQ(read.edges(), direct.edges());
}

TEST_F(CliTest, RunProducesDocument) {
  auto c = call({"run", "--graph", "forest-union:n=300,alpha=3", "--algo", "low-arb-logalpha",
                 "--seeds", "1..3"});
  ASSERT_EQ(c.code, app::kExitOk) << c.err;
  auto j = nlohmann::json::parse(c.out);
  EXPECT_EQ(j["graph"]["n"], 300);
  ASSERT_EQ(j["runs"].size(), 3u);
  for (const auto& r : j["runs"]) {
    EXPECT_TRUE(r["verification"]["proper"].get<bool>());
    EXPECT_TRUE(r["result"]["completed"].get<bool>());
    EXPECT_TRUE(r["error"].is_null());
  }
}

TEST_F(CliTest, OutputsByteIdentical) {
  const std::vector<std::string> args{"run", "--graph", "grid:n=400,alpha=2", "--algo", "high-arb",
                                      "--seeds", "5"};
  auto a = call(args);
  auto b = call(args);
  ASSERT_EQ(a.code, app::kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, RoundLimitExitCode) {
  auto c = call({"run", "--graph", "forest-union:n=300,alpha=3", "--algo", "low-arb-logalpha",
                 "--round-limit", "2"});
  EXPECT_EQ(c.code, app::kExitNonTermination);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(call({}).code, app::kExitUsage);
  EXPECT_EQ(call({"run", "--bogus"}).code, app::kExitUsage);
  EXPECT_EQ(call({"run", "--graph", "forest-union:n=10", "--algo", "nope"}).code, app::kExitError);
  EXPECT_EQ(call({"run", "--graph", path("missing.txt")}).code, app::kExitError);
}

TEST_F(CliTest, VerifyDetectsConflict) {
  ASSERT_EQ(call({"generate", "--graph", "random-tree:n=50,seed=2", "--out", path("t.txt")}).code,
            app::kExitOk);
  auto run = call({"run", "--graph", path("t.txt"), "--algo", "greedy-oracle", "--emit-coloring",
                   path("c.txt"), "--out", path("run.json")});
  ASSERT_EQ(run.code, app::kExitOk) << run.err;
  auto ok = call({"verify", "--graph", path("t.txt"), "--coloring", path("c.txt")});
  EXPECT_EQ(ok.code, app::kExitOk) << ok.err;

  {
    std::ofstream f(path("bad.txt"));
    for (int i = 0; i < 50; ++i) f << 0 << '\n';
  }
  auto bad = call({"verify", "--graph", path("t.txt"), "--coloring", path("bad.txt")});
  EXPECT_EQ(bad.code, app::kExitImproper);
  EXPECT_FALSE(nlohmann::json::parse(bad.out)["proper"].get<bool>());
}

TEST_F(CliTest, EmptySweepWritesHeader) {
  auto c = call({"sweep"});
  ASSERT_EQ(c.code, app::kExitOk) << c.err;
  EXPECT_EQ(c.out.substr(0, 6), "graph,");
  EXPECT_EQ(std::count(c.out.begin(), c.out.end(), '\n'), 1);
}

TEST_F(CliTest, SweepRowsInGridOrder) {
  auto c = call({"sweep", "--graph", "forest-union:n=200,alpha=2", "--graph", "grid:n=100,alpha=2",
                 "--algo", "low-arb-logalpha,greedy-oracle", "--seeds", "1,2", "--workers", "2"});
  ASSERT_EQ(c.code, app::kExitOk) << c.err;
  std::istringstream in(c.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 1u + 2 * 2 * 2);
  EXPECT_EQ(rows[1].rfind("\"forest-union", 0), 0u);
  EXPECT_EQ(rows[8].rfind("\"grid", 0), 0u);
  auto serial = call({"sweep", "--graph", "forest-union:n=200,alpha=2", "--graph",
                      "grid:n=100,alpha=2", "--algo", "low-arb-logalpha,greedy-oracle", "--seeds",
                      "1,2", "--workers", "1"});
  EXPECT_EQ(serial.out, c.out);
}

TEST_F(CliTest, ConfigFileFlagsWin) {
  {
    std::ofstream f(path("cfg.json"));
    f << R"({"graph": "forest-union:n=150,alpha=2", "algo": "low-arb-tradeoff", "seeds": [1, 2]})";
  }
  auto c = call({"run", "--config", path("cfg.json"), "--seeds", "7"});
  ASSERT_EQ(c.code, app::kExitOk) << c.err;
  auto j = nlohmann::json::parse(c.out);
  EXPECT_EQ(j["config"]["algo"], "low-arb-tradeoff");
  ASSERT_EQ(j["runs"].size(), 1u);
  EXPECT_EQ(j["runs"][0]["seed"], 7);
}

TEST_F(CliTest, BinaryExitCode) {
  const std::string cmd = std::string(ARBCOLOR_CLI_PATH) + " run --graph forest-union:n=100,alpha=2 --out " +
                          path("o.json") + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 0);
  EXPECT_FALSE(slurp(path("o.json")).empty());
  const std::string bad = std::string(ARBCOLOR_CLI_PATH) + " explode > /dev/null 2>&1";
  EXPECT_EQ(WEXITSTATUS(std::system(bad.c_str())), app::kExitUsage);
}

}  // namespace
}  // namespace arbcolor
