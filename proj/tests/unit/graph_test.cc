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

#include "arbcolor/graph.h"

#include <gtest/gtest.h>

#include "arbcolor/generators.h"
#include "test_graphs.h"

namespace arbcolor {
namespace {

using testing::complete_graph;
using testing::path_graph;

TEST(FromEdgeList, EmptySingleNode) {
  auto g = from_edge_list({}, 1);
  EXPECT_EQ(g.n(), 1);
  EXPECT_EQ(g.m(), 0);
}

TEST(FromEdgeList, DropsDuplicatesAndLoops) {
  std::vector<Edge> e{{0, 1}, {1, 0}, {1, 1}};
  auto g = from_edge_list(e, 2);
  EXPECT_EQ(g.m(), 1);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(1, 1));
}

TEST(FromEdgeList, CompleteGraph) {
  auto g = complete_graph(4);
  EXPECT_EQ(g.m(), 6);
  for (NodeId v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 3);
  EXPECT_EQ(g.max_degree(), 3);
}

TEST(FromEdgeList, RejectsOutOfRange) {
  std::vector<Edge> e{{0, 2}};
  EXPECT_THROW(from_edge_list(e, 2), GraphError);
  std::vector<Edge> neg{{-1, 0}};
  EXPECT_THROW(from_edge_list(neg, 2), GraphError);
}

TEST(Graph, SymmetricSortedAdjacency) {
  auto g = union_of_random_forests(200, 3, 11);
  std::int64_t total = 0;
  for (NodeId v = 0; v < g.n(); ++v) {
    auto nb = g.neighbors(v);
    total += static_cast<std::int64_t>(nb.size());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      EXPECT_NE(nb[i], v);
      if (i) EXPECT_LT(nb[i - 1], nb[i]);
      EXPECT_TRUE(g.has_edge(nb[i], v));
    }
  }
  EXPECT_EQ(total, 2 * g.m());
  auto edges = g.edges();
  EXPECT_EQ(static_cast<std::int64_t>(edges.size()), g.m());
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
}

TEST(InducedSubgraph, RelabelsDensely) {
  auto g = complete_graph(5);
  std::vector<char> keep{1, 0, 1, 1, 0};
  auto sub = induced_subgraph(g, keep);
  EXPECT_EQ(sub.graph.n(), 3);
  EXPECT_EQ(sub.graph.m(), 3);
  EXPECT_EQ(sub.to_parent, (std::vector<NodeId>{0, 2, 3}));
  EXPECT_EQ(sub.to_child[1], -1);
  EXPECT_EQ(sub.to_child[3], 2);
}

TEST(DensityLowerBound, Examples) {
  EXPECT_EQ(density_lower_bound(path_graph(10)), 1);
  EXPECT_EQ(density_lower_bound(random_tree(50, 3)), 1);
  EXPECT_EQ(density_lower_bound(complete_graph(4)), 2);
  EXPECT_EQ(density_lower_bound(complete_graph(6)), 3);
  EXPECT_EQ(density_lower_bound(from_edge_list({}, 1)), 0);
}

TEST(ExactArboricity, Examples) {
  EXPECT_EQ(exact_arboricity_bruteforce(path_graph(5)), 1);
  EXPECT_EQ(exact_arboricity_bruteforce(complete_graph(6)), 3);
  std::vector<Edge> e;
  for (NodeId u = 0; u < 4; ++u)
    for (NodeId v = u + 1; v < 4; ++v) e.emplace_back(u, v);
  e.emplace_back(3, 4);
  EXPECT_EQ(exact_arboricity_bruteforce(from_edge_list(e, 5)), 2);
  EXPECT_EQ(exact_arboricity_bruteforce(path_graph(2)), 1);
  EXPECT_EQ(exact_arboricity_bruteforce(from_edge_list({}, 3)), 0);
}

TEST(ExactArboricity, RefusesLargeGraphs) {
  EXPECT_THROW(exact_arboricity_bruteforce(path_graph(17)), std::exception);
}

TEST(ExactArboricity, BoundsChain) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto g = union_of_random_forests(12, 2, s);
    const auto exact = exact_arboricity_bruteforce(g);
    EXPECT_LE(density_lower_bound(g), exact);
    EXPECT_LE(exact, 2);
  }
}

TEST(DegeneracyOrder, MinDegreeLowestIdFirst) {
  auto g = testing::star_graph(3);
  auto order = degeneracy_order(g);
  // Leaves have degree 1; lowest id leaf goes first.
  ASSERT_EQ(order.size(), 4u);
  EXPECT_EQ(order[0], 1);
  auto k = complete_graph(4);
  EXPECT_EQ(degeneracy_order(k), (std::vector<NodeId>{0, 1, 2, 3}));
}

TEST(Greedy, TreeUsesTwoColors) {
  auto g = random_tree(300, 4);
  auto c = greedy_degeneracy_coloring(g, 1);
  EXPECT_TRUE(testing::edge_scan_proper(g, c.colors));
  EXPECT_LE(testing::distinct_colors(c.colors), 2);
}

TEST(Greedy, CliqueNeedsExactlyTwoAlpha) {
  for (std::int64_t a = 1; a <= 5; ++a) {
    auto g = complete_graph(static_cast<NodeId>(2 * a));
    auto c = greedy_degeneracy_coloring(g, a);
    EXPECT_EQ(testing::distinct_colors(c.colors), 2 * a);
  }
}

TEST(Greedy, ForestUnion) {
  auto g = union_of_random_forests(100, 3, 5);
  auto c = greedy_degeneracy_coloring(g, 3);
  EXPECT_TRUE(testing::edge_scan_proper(g, c.colors));
  EXPECT_LE(testing::distinct_colors(c.colors), 6);
  EXPECT_TRUE(c.is_total());
}

TEST(Greedy, WrongAlphaReported) {
  EXPECT_THROW(greedy_degeneracy_coloring(complete_graph(6), 2), GraphError);
}

}  // namespace
}  // namespace arbcolor
