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

#include "arbcolor/hpartition.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace arbcolor {
namespace {

constexpr std::int64_t kAlive = 0;
constexpr std::int64_t kJoined = 1;

class PeelingProgram {
 public:
  struct State {
    std::int32_t layer = 0;
  };

  PeelingProgram(std::int64_t threshold, std::int32_t budget)
      : threshold_(threshold), budget_(budget) {}

  State init(NodeView& node) {
    announce_alive(node);
    return {};
  }

  void on_round(State& s, NodeView& node, const Inbox& inbox) {
    if (node.round % 2 == 0) {
      announce_alive(node);
      return;
    }
    const auto step = static_cast<std::int32_t>((node.round + 1) / 2);
    std::int64_t remaining_degree = 0;
    for (const Message& msg : inbox) {
      if (msg.values[0] == kAlive) ++remaining_degree;
    }
    if (remaining_degree <= threshold_) {
      s.layer = step;
      const std::int64_t payload[] = {kJoined, step};
      node.out.broadcast(payload, 1 + payload_bits(1, budget_ + 1));
      node.out.halt(step);
    } else if (step >= budget_) {
      node.out.halt(std::nullopt);
    }
  }

 private:
  static void announce_alive(NodeView& node) {
    const std::int64_t payload[] = {kAlive};
    node.out.broadcast(payload, 1);
  }

  std::int64_t threshold_;
  std::int32_t budget_;
};

}  // namespace

Orientation::Orientation(std::vector<std::vector<NodeId>> out) : out_(std::move(out)) {
  for (auto& list : out_) {
    std::sort(list.begin(), list.end());
    d_out_ = std::max<std::int64_t>(d_out_, static_cast<std::int64_t>(list.size()));
  }
}

bool Orientation::points_to(NodeId from, NodeId to) const {
  const auto& list = out_[from];
  return std::binary_search(list.begin(), list.end(), to);
}

std::int64_t hpartition_degree(std::int64_t alpha, double epsilon) {
  return static_cast<std::int64_t>(std::floor((2.0 + epsilon) * static_cast<double>(alpha) + 1e-9));
}

std::int32_t hpartition_layer_bound(std::int64_t n, double epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("hpartition_layer_bound: epsilon must be > 0");
  const double base = (2.0 + epsilon) / 2.0;
  const double target = static_cast<double>(std::max<std::int64_t>(n, 1));
  std::int32_t ell = 1;
  double reach = base;
  while (reach * (1.0 + 1e-12) < target) {
    reach *= base;
    ++ell;
  }
  return ell;
}

PeelResult peel_h_partition(const Graph& g, std::int64_t threshold,
                            std::int32_t layer_budget, const RunOptions& options) {
  if (layer_budget < 1) throw std::invalid_argument("peel_h_partition: layer_budget must be >= 1");
  PeelingProgram program(threshold, layer_budget);
  RunOptions opts = options;
  opts.calendar_rounds = 2 * static_cast<std::int64_t>(layer_budget);
  opts.round_limit = std::max<std::int64_t>(opts.round_limit, opts.calendar_rounds);
  auto run_result = run(g, program, opts);

  PeelResult result;
  result.partition.layer.assign(static_cast<std::size_t>(g.n()), 0);
  result.partition.d = threshold;
  for (NodeId v = 0; v < g.n(); ++v) {
    if (run_result.outputs[v]) {
      const auto layer = static_cast<std::int32_t>(*run_result.outputs[v]);
      result.partition.layer[v] = layer;
      result.partition.ell = std::max(result.partition.ell, layer);
    } else {
      result.stuck.push_back(v);
    }
  }
  if (g.n() > 0 && result.partition.ell == 0) result.partition.ell = 1;
  result.stats = std::move(run_result.stats);
  return result;
}

HPartitionRun compute_h_partition(const Graph& g, std::int64_t alpha, double epsilon,
                                  const RunOptions& options, std::int64_t known_n) {
  if (epsilon <= 0) throw std::invalid_argument("compute_h_partition: epsilon must be > 0");
  if (alpha < 1) throw std::invalid_argument("compute_h_partition: alpha must be >= 1");
  const std::int64_t d = hpartition_degree(alpha, epsilon);
  const std::int32_t budget = hpartition_layer_bound(known_n > 0 ? known_n : g.n(), epsilon);
  auto peel = peel_h_partition(g, d, budget, options);
  if (!peel.complete()) {
    throw InvalidAlphaError("compute_h_partition: peeling stalled with " +
                                std::to_string(peel.stuck.size()) +
                                " nodes left; declared alpha " + std::to_string(alpha) +
                                " is below the arboricity",
                            std::move(peel.stuck), std::move(peel.stats));
  }
  peel.partition.epsilon = epsilon;
  return {std::move(peel.partition), std::move(peel.stats)};
}

Orientation orient_from_partition(const Graph& g, const HPartition& hp) {
  std::vector<std::vector<NodeId>> out(static_cast<std::size_t>(g.n()));
  for (NodeId v = 0; v < g.n(); ++v) {
    for (NodeId u : g.neighbors(v)) {
      if (hp.layer[u] > hp.layer[v] || (hp.layer[u] == hp.layer[v] && u > v)) {
        out[v].push_back(u);
      }
    }
  }
  return Orientation(std::move(out));
}

HPartitionValidation validate_h_partition(const Graph& g, const HPartition& hp) {
  HPartitionValidation report;
  if (hp.layer.size() != static_cast<std::size_t>(g.n())) {
    throw std::invalid_argument("validate_h_partition: layer vector size != n");
  }
  for (NodeId v = 0; v < g.n(); ++v) {
    const auto layer = hp.layer[v];
    if (layer < 1 || layer > hp.ell) {
      report.structural_violations.push_back(v);
      continue;
    }
    std::int64_t upward = 0;
    for (NodeId u : g.neighbors(v)) {
      if (hp.layer[u] >= layer) ++upward;
    }
    if (upward > hp.d) report.degree_violations.push_back(v);
  }
  report.pass = report.degree_violations.empty() && report.structural_violations.empty();
  return report;
}

HPartition restrict_partition(const HPartition& hp, const InducedSubgraph& sub) {
  HPartition out;
  out.d = hp.d;
  out.epsilon = hp.epsilon;
  out.layer.reserve(sub.to_parent.size());
  for (NodeId parent : sub.to_parent) {
    out.layer.push_back(hp.layer[parent]);
    out.ell = std::max(out.ell, hp.layer[parent]);
  }
  return out;
}

Orientation restrict_orientation(const Orientation& o, const InducedSubgraph& sub) {
  std::vector<std::vector<NodeId>> out(sub.to_parent.size());
  for (std::size_t child = 0; child < sub.to_parent.size(); ++child) {
    for (NodeId u : o.out(sub.to_parent[child])) {
      if (sub.to_child[u] >= 0) out[child].push_back(sub.to_child[u]);
    }
  }
  return Orientation(std::move(out));
}

}  // namespace arbcolor
