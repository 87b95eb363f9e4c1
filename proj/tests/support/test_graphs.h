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

#ifndef ARBCOLOR_TESTS_TEST_GRAPHS_H_
#define ARBCOLOR_TESTS_TEST_GRAPHS_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "arbcolor/graph.h"
#include "arbcolor/hpartition.h"

namespace arbcolor::testing {

inline Graph complete_graph(NodeId n) {
  std::vector<Edge> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return from_edge_list(e, n);
}

inline Graph path_graph(NodeId n) {
  std::vector<Edge> e;
  for (NodeId v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return from_edge_list(e, n);
}

// Center 0, leaves 1..leaves.
inline Graph star_graph(NodeId leaves) {
  std::vector<Edge> e;
  for (NodeId v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return from_edge_list(e, leaves + 1);
}

inline Graph empty_graph(NodeId n) { return from_edge_list({}, n); }

// Orientation from explicit arcs.
inline Orientation orientation_from_arcs(NodeId n, const std::vector<Edge>& arcs) {
  std::vector<std::vector<NodeId>> out(static_cast<std::size_t>(n));
  for (auto [u, v] : arcs) out[u].push_back(v);
  for (auto& l : out) std::sort(l.begin(), l.end());
  return Orientation(std::move(out));
}

// Longest directed path (edges) by plain exhaustive DFS over simple paths.
inline std::int64_t brute_force_longest_path(const Orientation& o, const std::vector<char>& keep) {
  std::int64_t best = 0;
  std::vector<char> on(static_cast<std::size_t>(o.n()), 0);
  std::function<void(NodeId, std::int64_t)> dfs = [&](NodeId v, std::int64_t len) {
    best = std::max(best, len);
    on[v] = 1;
    for (NodeId u : o.out(v)) {
      if (keep[u] && !on[u]) dfs(u, len + 1);
    }
    on[v] = 0;
  };
  for (NodeId v = 0; v < o.n(); ++v) {
    if (keep[v]) dfs(v, 0);
  }
  return best;
}

// Direct edge scan used as an independent properness oracle.
inline bool edge_scan_proper(const Graph& g, const std::vector<Color>& colors) {
  for (const auto& [u, v] : g.edges()) {
    if (colors[u] != kNoColor && colors[u] == colors[v]) return false;
  }
  return true;
}

inline std::int64_t distinct_colors(const std::vector<Color>& colors) {
  std::vector<Color> c;
  for (Color x : colors)
    if (x != kNoColor) c.push_back(x);
  std::sort(c.begin(), c.end());
  return std::unique(c.begin(), c.end()) - c.begin();
}

}  // namespace arbcolor::testing

#endif  // ARBCOLOR_TESTS_TEST_GRAPHS_H_
