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

#ifndef ARBCOLOR_GENERATORS_H_
#define ARBCOLOR_GENERATORS_H_

#include <cstdint>
#include <string>

#include "arbcolor/graph.h"

namespace arbcolor {

enum class GraphFamily { kForestUnion, kDisjointCliques, kRandomTree, kGrid };

std::string to_string(GraphFamily family);
GraphFamily parse_graph_family(const std::string& name);

struct GenSpec {
  GraphFamily family = GraphFamily::kForestUnion;
  NodeId n = 2;
  std::int64_t alpha = 1;
  std::uint64_t seed = 0;
};

// A generated graph together with its declared arboricity upper bound.
struct GeneratedGraph {
  Graph graph;
  std::int64_t declared_alpha = 1;
};

// Union of alpha independent uniform random spanning trees (random Prüfer
// sequences), parallel edges merged.
Graph union_of_random_forests(NodeId n, std::int64_t alpha, std::uint64_t seed);

// floor(n / (2 alpha)) disjoint cliques of 2 alpha nodes each; the remaining
// nodes are isolated.
Graph disjoint_cliques(NodeId n, std::int64_t alpha);

Graph random_tree(NodeId n, std::uint64_t seed);

// Row-major grid of width ceil(sqrt(n)), truncated to n nodes.
Graph grid_graph(NodeId n);

// Dispatches on spec.family and reports the declared arboricity: alpha for
// forest-union and disjoint-cliques, 1 for random-tree, 2 for grid.
GeneratedGraph generate(const GenSpec& spec);

// "family:n=1024,alpha=4,seed=7". Missing seed keeps `default_seed`.
GenSpec parse_gen_spec(const std::string& text, std::uint64_t default_seed = 0);
std::string format_gen_spec(const GenSpec& spec);

}  // namespace arbcolor

#endif  // ARBCOLOR_GENERATORS_H_
