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

#include "arbcolor/generators.h"

#include <gtest/gtest.h>

#include "arbcolor/graph.h"
#include "test_graphs.h"

namespace arbcolor {
namespace {

TEST(ForestUnion, SingleForestIsTree) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto g = union_of_random_forests(64, 1, s);
    EXPECT_EQ(g.m(), 63);
    auto c = greedy_degeneracy_coloring(g, 1);
    EXPECT_TRUE(testing::edge_scan_proper(g, c.colors));
  }
}

TEST(ForestUnion, DensityBound) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto g = union_of_random_forests(100, 4, s);
    EXPECT_LE(g.m(), 4 * 99);
    EXPECT_LE(density_lower_bound(g), 4);
  }
}

TEST(ForestUnion, SmallExactArboricity) {
  for (std::uint64_t s = 0; s < 8; ++s) {
    EXPECT_LE(exact_arboricity_bruteforce(union_of_random_forests(10, 2, s)), 2);
  }
}

TEST(ForestUnion, Deterministic) {
  EXPECT_EQ(union_of_random_forests(500, 3, 9).edges(), union_of_random_forests(500, 3, 9).edges());
  EXPECT_NE(union_of_random_forests(500, 3, 9).edges(), union_of_random_forests(500, 3, 10).edges());
}

TEST(DisjointCliques, Examples) {
  auto k6 = disjoint_cliques(6, 3);
  EXPECT_EQ(k6.m(), 15);
  EXPECT_EQ(density_lower_bound(k6), 3);

  auto matching = disjoint_cliques(12, 1);
  EXPECT_EQ(matching.m(), 6);
  for (NodeId v = 0; v < 12; ++v) EXPECT_EQ(matching.degree(v), 1);

  auto two = disjoint_cliques(13, 3);
  EXPECT_EQ(two.m(), 30);
  EXPECT_EQ(two.degree(12), 0);
  EXPECT_EQ(exact_arboricity_bruteforce(two), 3);
}

TEST(DisjointCliques, GreedyNeedsTwoAlpha) {
  for (std::int64_t a = 1; a <= 4; ++a) {
    auto g = disjoint_cliques(40, a);
    EXPECT_EQ(testing::distinct_colors(greedy_degeneracy_coloring(g, a).colors), 2 * a);
  }
}

TEST(RandomTreeAndGrid, Shapes) {
  auto t = random_tree(77, 1);
  EXPECT_EQ(t.m(), 76);
  auto g = grid_graph(16);
  EXPECT_EQ(g.m(), 24);
  auto partial = grid_graph(10);  // width 4: rows of 4, 4, 2
  EXPECT_EQ(partial.m(), 13);
}

TEST(GenSpec, ParseAndFormat) {
  auto s = parse_gen_spec("forest-union:n=1024,alpha=4,seed=7");
  EXPECT_EQ(s.family, GraphFamily::kForestUnion);
  EXPECT_EQ(s.n, 1024);
  EXPECT_EQ(s.alpha, 4);
  EXPECT_EQ(s.seed, 7u);
  EXPECT_EQ(parse_gen_spec(format_gen_spec(s)).seed, 7u);
  EXPECT_EQ(parse_gen_spec("grid:n=9", 5).seed, 5u);
  EXPECT_THROW(parse_gen_spec("nope:n=3"), std::exception);
  EXPECT_THROW(parse_gen_spec("grid:n=abc"), std::exception);
}

TEST(Generate, DeclaredAlpha) {
  EXPECT_EQ(generate(parse_gen_spec("forest-union:n=50,alpha=3")).declared_alpha, 3);
  EXPECT_EQ(generate(parse_gen_spec("disjoint-cliques:n=50,alpha=2")).declared_alpha, 2);
  EXPECT_EQ(generate(parse_gen_spec("random-tree:n=50")).declared_alpha, 1);
  EXPECT_EQ(generate(parse_gen_spec("grid:n=50")).declared_alpha, 2);
}

}  // namespace
}  // namespace arbcolor
