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

#include "arbcolor/serialize.h"

#include <gtest/gtest.h>

#include "arbcolor/generators.h"
#include "arbcolor/pipeline.h"
#include "arbcolor/verify.h"

namespace arbcolor {
namespace {

TEST(Serialize, RoundStats) {
  RoundStats s;
  s.rounds = 3;
  s.messages = 10;
  s.max_payload_bits = 7;
  EXPECT_EQ(dump(to_json(s)),
            "{\n  \"rounds\": 3,\n  \"messages\": 10,\n  \"max_payload_bits\": 7\n}\n");
}

TEST(Serialize, StageWithoutBlock) {
  StageRecord r;
  r.stage = "x";
  auto j = to_json(r);
  EXPECT_TRUE(j["palette_block"].is_null());
  EXPECT_EQ(j["stage"], "x");
}

TEST(Serialize, PipelineKeysInOrder) {
  auto g = union_of_random_forests(200, 2, 1);
  AlgorithmConfig c;
  c.algorithm = Algorithm::kLowArbTradeoff;
  c.alpha = 2;
  auto run = run_algorithm(g, c);
  auto j = to_json(run.result);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> want{"algorithm",        "colors_used",     "rounds",
                                      "messages",         "max_payload_bits", "stage_breakdown",
                                      "fallback_events",  "completed"};
  EXPECT_EQ(keys, want);
  EXPECT_EQ(j["algorithm"], "low-arb-tradeoff");
  EXPECT_EQ(j["stage_breakdown"].size(), run.result.stages.size());
  EXPECT_EQ(dump(j), dump(to_json(run_algorithm(g, c).result)));
}

TEST(Serialize, Report) {
  auto g = union_of_random_forests(100, 2, 1);
  AlgorithmConfig c;
  c.algorithm = Algorithm::kGreedyOracle;
  c.alpha = 2;
  auto run = run_algorithm(g, c);
  auto j = to_json(report(g, run.result.coloring, run.result.stats));
  EXPECT_TRUE(j["proper"].get<bool>());
  EXPECT_TRUE(j["residual"].is_null());
  EXPECT_EQ(j["uncolored"], 0);
  EXPECT_TRUE(j["congest"]["within_limit"].get<bool>());
}

}  // namespace
}  // namespace arbcolor
