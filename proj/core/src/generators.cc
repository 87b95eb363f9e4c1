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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "arbcolor/rng.h"

namespace arbcolor {
namespace {

// Linear-time Prüfer decoding; appends the n-1 tree edges.
void decode_pruefer(const std::vector<NodeId>& code, NodeId n,
                    std::vector<Edge>& out) {
  std::vector<std::int64_t> degree(static_cast<std::size_t>(n), 1);
  for (NodeId x : code) ++degree[x];
  NodeId ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  NodeId leaf = ptr;
  for (NodeId v : code) {
    out.emplace_back(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  out.emplace_back(leaf, n - 1);
}

void append_random_tree(NodeId n, Rng& rng, std::vector<Edge>& out) {
  if (n < 2) return;
  if (n == 2) {
    out.emplace_back(0, 1);
    return;
  }
  std::vector<NodeId> code(static_cast<std::size_t>(n) - 2);
  for (auto& x : code) x = static_cast<NodeId>(rng.uniform(static_cast<std::uint64_t>(n)));
  decode_pruefer(code, n, out);
}

}  // namespace

std::string to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::kForestUnion: return "forest-union";
    case GraphFamily::kDisjointCliques: return "disjoint-cliques";
    case GraphFamily::kRandomTree: return "random-tree";
    case GraphFamily::kGrid: return "grid";
  }
  return "unknown";
}

GraphFamily parse_graph_family(const std::string& name) {
  if (name == "forest-union") return GraphFamily::kForestUnion;
  if (name == "disjoint-cliques") return GraphFamily::kDisjointCliques;
  if (name == "random-tree") return GraphFamily::kRandomTree;
  if (name == "grid") return GraphFamily::kGrid;
  throw std::invalid_argument("unknown graph family '" + name + "'");
}

Graph union_of_random_forests(NodeId n, std::int64_t alpha, std::uint64_t seed) {
  if (n < 1 || alpha < 1) {
    throw std::invalid_argument("union_of_random_forests: need n >= 1, alpha >= 1");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(alpha) * static_cast<std::size_t>(n));
  for (std::int64_t layer = 0; layer < alpha; ++layer) {
    Rng rng(hash_combine(seed, static_cast<std::uint64_t>(layer)));
    append_random_tree(n, rng, edges);
  }
  return from_edge_list(edges, n);
}

Graph disjoint_cliques(NodeId n, std::int64_t alpha) {
  if (n < 0 || alpha < 1) throw std::invalid_argument("disjoint_cliques: need alpha >= 1");
  const std::int64_t size = 2 * alpha;
  std::vector<Edge> edges;
  for (std::int64_t base = 0; base + size <= n; base += size) {
    for (std::int64_t i = 0; i < size; ++i) {
      for (std::int64_t j = i + 1; j < size; ++j) {
        edges.emplace_back(static_cast<NodeId>(base + i), static_cast<NodeId>(base + j));
      }
    }
  }
  return from_edge_list(edges, n);
}

Graph random_tree(NodeId n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree: need n >= 1");
  std::vector<Edge> edges;
  Rng rng(hash_combine(seed, 0));
  append_random_tree(n, rng, edges);
  return from_edge_list(edges, n);
}

Graph grid_graph(NodeId n) {
  if (n < 1) throw std::invalid_argument("grid_graph: need n >= 1");
  NodeId width = static_cast<NodeId>(std::ceil(std::sqrt(static_cast<double>(n))));
  while (static_cast<std::int64_t>(width) * width < n) ++width;
  std::vector<Edge> edges;
  for (NodeId v = 0; v < n; ++v) {
    if ((v + 1) % width != 0 && v + 1 < n) edges.emplace_back(v, v + 1);
    if (v + width < n) edges.emplace_back(v, v + width);
  }
  return from_edge_list(edges, n);
}

GeneratedGraph generate(const GenSpec& spec) {
  switch (spec.family) {
    case GraphFamily::kForestUnion:
      return {union_of_random_forests(spec.n, spec.alpha, spec.seed), spec.alpha};
    case GraphFamily::kDisjointCliques:
      return {disjoint_cliques(spec.n, spec.alpha), spec.alpha};
    case GraphFamily::kRandomTree:
      return {random_tree(spec.n, spec.seed), 1};
    case GraphFamily::kGrid:
      return {grid_graph(spec.n), 2};
  }
  throw std::invalid_argument("generate: bad family");
}

GenSpec parse_gen_spec(const std::string& text, std::uint64_t default_seed) {
  GenSpec spec;
  spec.seed = default_seed;
  const auto colon = text.find(':');
  spec.family = parse_graph_family(text.substr(0, colon));
  if (colon == std::string::npos) return spec;
  std::istringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad generator field '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "n") {
      spec.n = static_cast<NodeId>(std::stoll(value));
    } else if (key == "alpha") {
      spec.alpha = std::stoll(value);
    } else if (key == "seed") {
      spec.seed = std::stoull(value);
    } else {
      throw std::invalid_argument("unknown generator field '" + key + "'");
    }
  }
  if (spec.n < 1 || spec.alpha < 1) {
    throw std::invalid_argument("generator spec needs n >= 1 and alpha >= 1");
  }
  return spec;
}

std::string format_gen_spec(const GenSpec& spec) {
  std::ostringstream out;
  out << to_string(spec.family) << ":n=" << spec.n << ",alpha=" << spec.alpha
      << ",seed=" << spec.seed;
  return out.str();
}

}  // namespace arbcolor
