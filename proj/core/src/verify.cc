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

#include "arbcolor/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>

namespace arbcolor {

ProperCheck check_proper(const Graph& g, std::span<const Color> colors) {
  if (colors.size() != static_cast<std::size_t>(g.n())) {
    throw std::invalid_argument("check_proper: coloring size does not match graph");
  }
  ProperCheck out;
  for (NodeId u = 0; u < g.n(); ++u) {
    if (colors[u] == kNoColor) continue;
    for (NodeId v : g.neighbors(u)) {
      if (v > u && colors[v] == colors[u]) out.violations.emplace_back(u, v);
    }
  }
  out.pass = out.violations.empty();
  return out;
}

ColorCount count_colors(const ColoringState& coloring) {
  std::vector<Color> distinct;
  for (Color c : coloring.colors) {
    if (c != kNoColor) distinct.push_back(c);
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  ColorCount out;
  out.count = static_cast<std::int64_t>(distinct.size());
  std::int64_t inside = 0;
  for (const auto& b : coloring.blocks) {
    auto lo = std::lower_bound(distinct.begin(), distinct.end(), b.offset);
    auto hi = std::lower_bound(distinct.begin(), distinct.end(), b.end());
    const auto used = static_cast<std::int64_t>(hi - lo);
    out.blocks.push_back({b, used});
    inside += used;
  }
  out.outside_blocks = std::max<std::int64_t>(0, out.count - inside);
  return out;
}

ResidualMetrics residual_metrics(const Orientation& orientation, std::span<const char> uncolored) {
  ResidualMetrics m;
  const NodeId n = orientation.n();
  for (NodeId v = 0; v < n; ++v) {
    if (!uncolored[v]) continue;
    ++m.nodes;
    std::int64_t k = 0;
    for (NodeId u : orientation.out(v)) k += uncolored[u] ? 1 : 0;
    m.max_out_degree = std::max(m.max_out_degree, k);
  }
  // Iterative DFS with memo; state 1 = on stack, 2 = done.
  std::vector<std::int64_t> memo(static_cast<std::size_t>(n), 0);
  std::vector<char> state(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<NodeId, std::size_t>> stack;
  for (NodeId s = 0; s < n && m.acyclic; ++s) {
    if (!uncolored[s] || state[s]) continue;
    stack.push_back({s, 0});
    state[s] = 1;
    while (!stack.empty() && m.acyclic) {
      auto& [v, i] = stack.back();
      auto out = orientation.out(v);
      if (i < out.size()) {
        const NodeId u = out[i++];
        if (!uncolored[u]) continue;
        if (state[u] == 1) {
          m.acyclic = false;
        } else if (state[u] == 0) {
          state[u] = 1;
          stack.push_back({u, 0});
        }
        continue;
      }
      std::int64_t best = 0;
      for (NodeId u : out) {
        if (uncolored[u]) best = std::max(best, memo[u] + 1);
      }
      memo[v] = best;
      state[v] = 2;
      m.longest_path = std::max(m.longest_path, best);
      stack.pop_back();
    }
  }
  if (!m.acyclic) m.longest_path = -1;
  return m;
}

VerificationReport report(const Graph& g, const ColoringState& coloring, const RoundStats& stats,
                          const VerifyConfig& config) {
  VerificationReport r;
  auto proper = check_proper(g, coloring.colors);
  r.proper = proper.pass;
  r.violations = std::move(proper.violations);
  r.colors = count_colors(coloring);
  r.rounds = stats.rounds;
  r.messages = stats.messages;
  r.max_payload_bits = stats.max_payload_bits;
  r.uncolored = std::count(coloring.colors.begin(), coloring.colors.end(), kNoColor);
  if (config.residual_orientation && !config.residual_uncolored.empty()) {
    r.residual = residual_metrics(*config.residual_orientation, config.residual_uncolored);
  }
  const double lg = g.n() >= 2 ? std::log2(static_cast<double>(g.n())) : 1.0;
  r.congest_limit_bits = static_cast<std::int64_t>(std::ceil(config.congest_c * lg - 1e-9));
  r.congest_ok = r.max_payload_bits <= r.congest_limit_bits;
  return r;
}

}  // namespace arbcolor
