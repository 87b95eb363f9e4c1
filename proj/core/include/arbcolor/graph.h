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

#ifndef ARBCOLOR_GRAPH_H_
#define ARBCOLOR_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arbcolor/coloring.h"

namespace arbcolor {

using Edge = std::pair<NodeId, NodeId>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple undirected graph in compressed adjacency form. Neighbor lists are
// sorted ascending, symmetric, and free of self-loops and duplicates.
// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  NodeId n() const { return static_cast<NodeId>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::int64_t m() const { return static_cast<std::int64_t>(adjacency_.size() / 2); }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  std::int64_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::int64_t max_degree() const;
  bool has_edge(NodeId u, NodeId v) const;

  // Each undirected edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend Graph from_edge_list(std::span<const Edge> edges, NodeId n);

 private:
  std::vector<std::int64_t> offsets_;
  std::vector<NodeId> adjacency_;
};

// Builds a graph on nodes 0..n-1. Duplicate edges (in either direction) and
// self-loops are dropped; ids outside [0, n) are rejected with GraphError.
Graph from_edge_list(std::span<const Edge> edges, NodeId n);

// Subgraph induced by the nodes with keep[v] != 0, relabelled densely in
// increasing id order.
struct InducedSubgraph {
  Graph graph;
  std::vector<NodeId> to_parent;   // child id -> parent id
  std::vector<NodeId> to_child;    // parent id -> child id or -1
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const char> keep);

// Arboricity bounds for one graph.
struct ArboricityEstimate {
  std::int64_t lower = 0;
  std::int64_t declared = 0;
  std::optional<std::int64_t> exact;
};

// ceil(m / (n - 1)); 0 when n < 2.
std::int64_t density_lower_bound(const Graph& g);

inline constexpr NodeId kMaxBruteForceNodes = 16;

// Evaluates max over vertex subsets S with |S| >= 2 of
// ceil(|E(S)| / (|S| - 1)). Refuses graphs with more than 16 nodes.
std::int64_t exact_arboricity_bruteforce(const Graph& g);

// Min-degree peeling order (lowest id breaks ties), first removed first.
std::vector<NodeId> degeneracy_order(const Graph& g);

// Sequential 2*alpha-coloring: colors the degeneracy order from the last
// removed node to the first, each with the smallest color unused by its
// later neighbors. Throws GraphError if some node has more than
// 2*declared_alpha - 1 later neighbors.
ColoringState greedy_degeneracy_coloring(const Graph& g,
                                         std::int64_t declared_alpha);

}  // namespace arbcolor

#endif  // ARBCOLOR_GRAPH_H_
