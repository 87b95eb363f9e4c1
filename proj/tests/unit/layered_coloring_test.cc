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

#include "arbcolor/layered_coloring.h"

#include <gtest/gtest.h>

#include "arbcolor/generators.h"
#include "test_graphs.h"

namespace arbcolor {
namespace {

LayeredColoringParams params(std::int32_t budget, std::int64_t iters, std::int64_t proposals,
                             Color palette, std::vector<Color> offsets = {0}) {
  LayeredColoringParams p;
  p.layer_budget = budget;
  p.iterations_per_layer = iters;
  p.proposals = proposals;
  p.palette_size = palette;
  p.pass_offsets = std::move(offsets);
  return p;
}

TEST(LayeredColoring, EdgelessColorsInFirstIteration) {
  auto g = testing::empty_graph(20);
  auto hp = compute_h_partition(g, 1, 1.0).partition;
  auto p = params(3, 4, 1, 3);
  auto r = run_layered_coloring(g, hp, p);
  for (auto c : r.colors) {
    EXPECT_GE(c, 0);
    EXPECT_LT(c, 3);
  }
  EXPECT_EQ(r.stats.rounds, p.calendar_rounds());
  // Layer 1 window is the last one: proposals go out one round before it
  // and are decided in its first round. active_per_round[i] counts round i+1.
  const std::int64_t start = (3 - 1) * 4 + 1;
  for (std::int64_t rd = 0; rd < r.stats.rounds; ++rd) {
    if (rd + 2 != start && rd + 1 != start) {
      EXPECT_EQ(r.stats.active_per_round[rd], 0) << rd;
    }
  }
}

TEST(LayeredColoring, ProperAndInsideBlocks) {
  for (std::uint64_t s = 0; s < 6; ++s) {
    auto g = union_of_random_forests(800, 3, s);
    auto hp = compute_h_partition(g, 3, 1.0).partition;
    auto p = params(hpartition_layer_bound(800, 1.0), 2, 2, 12, {100, 200});
    RunOptions o;
    o.seed = s;
    auto r = run_layered_coloring(g, hp, p, o);
    EXPECT_TRUE(testing::edge_scan_proper(g, r.colors));
    for (auto c : r.colors) {
      if (c == kNoColor) continue;
      EXPECT_TRUE((c >= 100 && c < 112) || (c >= 200 && c < 212)) << c;
    }
    EXPECT_EQ(r.stats.rounds, p.calendar_rounds());
  }
}

TEST(LayeredColoring, TinyPaletteLeavesNodesUncolored) {
  auto g = testing::complete_graph(8);
  auto hp = compute_h_partition(g, 4, 1.0).partition;
  auto r = run_layered_coloring(g, hp, params(1, 1, 1, 2));
  EXPECT_TRUE(testing::edge_scan_proper(g, r.colors));
  EXPECT_LE(testing::distinct_colors(r.colors), 2);
  EXPECT_GE(std::count(r.colors.begin(), r.colors.end(), kNoColor), 6);
}

TEST(LayeredColoring, Deterministic) {
  auto g = union_of_random_forests(500, 2, 1);
  auto hp = compute_h_partition(g, 2, 1.0).partition;
  auto p = params(hpartition_layer_bound(500, 1.0), 3, 1, 6);
  RunOptions o;
  o.seed = 4;
  EXPECT_EQ(run_layered_coloring(g, hp, p, o).colors, run_layered_coloring(g, hp, p, o).colors);
}

TEST(LayeredColoring, RejectsBadParams) {
  auto g = testing::path_graph(3);
  auto hp = compute_h_partition(g, 1, 1.0).partition;
  EXPECT_THROW(run_layered_coloring(g, hp, params(3, 1, 5, 3)), std::invalid_argument);
  EXPECT_THROW(run_layered_coloring(g, hp, params(3, 1, 1, 3, {})), std::invalid_argument);
  EXPECT_THROW(run_layered_coloring(g, hp, params(0, 1, 1, 3)), std::invalid_argument);
}

}  // namespace
}  // namespace arbcolor
