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

#ifndef ARBCOLOR_HPARTITION_H_
#define ARBCOLOR_HPARTITION_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "arbcolor/graph.h"
#include "arbcolor/simulator.h"

namespace arbcolor {

// Layering H_1..H_ell: every node in layer j has at most d neighbors in
// layers >= j. Layers are 1-based.
struct HPartition {
  std::vector<std::int32_t> layer;
  std::int32_t ell = 0;
  std::int64_t d = 0;
  double epsilon = 0.0;
};

// Acyclic orientation stored as out-neighbor lists (sorted).
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<std::vector<NodeId>> out);

  NodeId n() const { return static_cast<NodeId>(out_.size()); }
  std::span<const NodeId> out(NodeId v) const { return out_[v]; }
  std::int64_t out_degree(NodeId v) const { return static_cast<std::int64_t>(out_[v].size()); }
  std::int64_t max_out_degree() const { return d_out_; }
  bool points_to(NodeId from, NodeId to) const;

 private:
  std::vector<std::vector<NodeId>> out_;
  std::int64_t d_out_ = 0;
};

class InvalidAlphaError : public std::runtime_error {
 public:
  InvalidAlphaError(const std::string& what, std::vector<NodeId> stuck, RoundStats stats)
      : std::runtime_error(what), stuck_nodes(std::move(stuck)), stats(std::move(stats)) {}
  std::vector<NodeId> stuck_nodes;
  RoundStats stats;  // cost of the failed peeling
};

// floor((2 + epsilon) * alpha), the peeling threshold.
std::int64_t hpartition_degree(std::int64_t alpha, double epsilon);

// Smallest ell >= 1 with ((2 + epsilon) / 2)^ell >= n.
std::int32_t hpartition_layer_bound(std::int64_t n, double epsilon);

struct PeelResult {
  HPartition partition;        // layer 0 for nodes that never joined
  std::vector<NodeId> stuck;   // nodes left after the layer budget
  RoundStats stats;
  bool complete() const { return stuck.empty(); }
};

// Distributed peeling with an explicit degree threshold: in peeling step k
// (rounds 2k-1, 2k) every remaining node whose remaining degree is at most
// `threshold` joins layer k and announces it. The run occupies a calendar of
// 2 * layer_budget rounds.
PeelResult peel_h_partition(const Graph& g, std::int64_t threshold,
                            std::int32_t layer_budget, const RunOptions& options = {});

struct HPartitionRun {
  HPartition partition;
  RoundStats stats;
};

// H-partition with d = floor((2+epsilon) alpha) and at most
// hpartition_layer_bound(n, epsilon) layers. Throws InvalidAlphaError if the
// peeling stalls, which happens only when alpha is below the arboricity.
// known_n overrides g.n() in the layer bound (subgraph runs).
HPartitionRun compute_h_partition(const Graph& g, std::int64_t alpha, double epsilon,
                                  const RunOptions& options = {}, std::int64_t known_n = 0);

// Cross-layer edges point to the higher layer, same-layer edges to the
// higher id.
Orientation orient_from_partition(const Graph& g, const HPartition& hp);

struct HPartitionValidation {
  bool pass = true;
  std::vector<NodeId> degree_violations;   // > d neighbors in layers >= own
  std::vector<NodeId> structural_violations;  // layer outside 1..ell
};

HPartitionValidation validate_h_partition(const Graph& g, const HPartition& hp);

// Restrictions to an induced subgraph.
HPartition restrict_partition(const HPartition& hp, const InducedSubgraph& sub);
Orientation restrict_orientation(const Orientation& o, const InducedSubgraph& sub);

}  // namespace arbcolor

#endif  // ARBCOLOR_HPARTITION_H_
