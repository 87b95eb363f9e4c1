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

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>
#include <string>

namespace arbcolor {

std::int64_t ColoringState::uncolored_count() const {
  return std::count(colors.begin(), colors.end(), kNoColor);
}

std::vector<char> ColoringState::uncolored_mask() const {
  std::vector<char> mask(colors.size());
  for (std::size_t v = 0; v < colors.size(); ++v) mask[v] = colors[v] == kNoColor;
  return mask;
}

Graph from_edge_list(std::span<const Edge> edges, NodeId n) {
  if (n < 0) throw GraphError("from_edge_list: negative node count");
  std::vector<std::int64_t> start(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("from_edge_list: edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ") out of range for n=" +
                       std::to_string(n));
    }
    if (u == v) continue;
    ++start[u + 1];
    ++start[v + 1];
  }
  for (NodeId v = 0; v < n; ++v) start[v + 1] += start[v];
  std::vector<NodeId> slots(static_cast<std::size_t>(start[n]));
  std::vector<std::int64_t> fill(start.begin(), start.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    slots[fill[u]++] = v;
    slots[fill[v]++] = u;
  }

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.adjacency_.reserve(slots.size());
  for (NodeId v = 0; v < n; ++v) {
    auto first = slots.begin() + start[v];
    auto last = slots.begin() + start[v + 1];
    std::sort(first, last);
    last = std::unique(first, last);
    g.adjacency_.insert(g.adjacency_.end(), first, last);
    g.offsets_[v + 1] = static_cast<std::int64_t>(g.adjacency_.size());
  }
  return g;
}

std::int64_t Graph::max_degree() const {
  std::int64_t best = 0;
  for (NodeId v = 0; v < n(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m()));
  for (NodeId u = 0; u < n(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const char> keep) {
  InducedSubgraph sub;
  sub.to_child.assign(static_cast<std::size_t>(g.n()), -1);
  for (NodeId v = 0; v < g.n(); ++v) {
    if (keep[v]) {
      sub.to_child[v] = static_cast<NodeId>(sub.to_parent.size());
      sub.to_parent.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (NodeId v : sub.to_parent) {
    for (NodeId u : g.neighbors(v)) {
      if (v < u && keep[u]) edges.emplace_back(sub.to_child[v], sub.to_child[u]);
    }
  }
  sub.graph = from_edge_list(edges, static_cast<NodeId>(sub.to_parent.size()));
  return sub;
}

std::int64_t density_lower_bound(const Graph& g) {
  if (g.n() < 2) return 0;
  const std::int64_t denom = g.n() - 1;
  return (g.m() + denom - 1) / denom;
}

std::int64_t exact_arboricity_bruteforce(const Graph& g) {
  if (g.n() > kMaxBruteForceNodes) {
    throw GraphError("exact_arboricity_bruteforce: n=" + std::to_string(g.n()) +
                     " exceeds " + std::to_string(kMaxBruteForceNodes));
  }
  const NodeId n = g.n();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u : g.neighbors(v)) adj[v] |= 1u << u;
  }
  std::int64_t best = 0;
  const std::uint32_t full = n == 0 ? 0 : (n == 32 ? ~0u : (1u << n) - 1);
  for (std::uint32_t subset = 1; subset <= full && subset != 0; ++subset) {
    const int size = std::popcount(subset);
    if (size < 2) continue;
    std::int64_t twice_edges = 0;
    for (std::uint32_t rest = subset; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      twice_edges += std::popcount(adj[v] & subset);
    }
    const std::int64_t edges = twice_edges / 2;
    best = std::max(best, (edges + size - 2) / (size - 1));
  }
  return best;
}

std::vector<NodeId> degeneracy_order(const Graph& g) {
  // Lazy min-heap keyed by (degree, id) packed into one word.
  const NodeId n = g.n();
  const auto key = [n](std::int64_t d, NodeId v) {
    return static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
  };
  std::vector<std::int64_t> deg(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> init;
  init.reserve(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    init.push_back(key(deg[v], v));
  }
  std::priority_queue<std::uint64_t, std::vector<std::uint64_t>, std::greater<>> heap(
      std::greater<>{}, std::move(init));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<NodeId> order;
  order.reserve(static_cast<std::size_t>(n));
  while (!heap.empty()) {
    const std::uint64_t top = heap.top();
    heap.pop();
    const auto v = static_cast<NodeId>(top % static_cast<std::uint64_t>(n));
    const auto d = static_cast<std::int64_t>(top / static_cast<std::uint64_t>(n));
    if (removed[v] || d != deg[v]) continue;
    removed[v] = 1;
    order.push_back(v);
    for (NodeId u : g.neighbors(v)) {
      if (!removed[u]) heap.push(key(--deg[u], u));
    }
  }
  return order;
}

ColoringState greedy_degeneracy_coloring(const Graph& g,
                                         std::int64_t declared_alpha) {
  if (declared_alpha < 1 && g.m() > 0) {
    throw GraphError("greedy_degeneracy_coloring: declared alpha must be >= 1");
  }
  const NodeId n = g.n();
  const auto order = degeneracy_order(g);
  std::vector<std::int64_t> position(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<std::int64_t>(i);

  const std::int64_t palette = std::max<std::int64_t>(1, 2 * declared_alpha);
  ColoringState out(static_cast<std::size_t>(n));
  out.blocks.push_back({"greedy-oracle", 0, palette});
  std::vector<std::int64_t> seen(static_cast<std::size_t>(palette) + 1, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    std::int64_t later = 0;
    for (NodeId u : g.neighbors(v)) {
      if (position[u] > position[v]) {
        ++later;
        const Color c = out.colors[u];
        if (c < palette) seen[c] = v;
      }
    }
    if (later > palette - 1) {
      throw GraphError("greedy_degeneracy_coloring: node " + std::to_string(v) +
                       " has " + std::to_string(later) +
                       " later neighbors; declared alpha " +
                       std::to_string(declared_alpha) + " is too small");
    }
    Color c = 0;
    while (seen[c] == v) ++c;
    out.colors[v] = c;
  }
  return out;
}

}  // namespace arbcolor
