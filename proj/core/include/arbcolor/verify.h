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

#ifndef ARBCOLOR_VERIFY_H_
#define ARBCOLOR_VERIFY_H_

// Checkers that only read (graph, coloring) pairs.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arbcolor/coloring.h"
#include "arbcolor/graph.h"
#include "arbcolor/hpartition.h"
#include "arbcolor/simulator.h"

namespace arbcolor {

struct ProperCheck {
  bool pass = true;
  std::vector<Edge> violations;  // monochromatic edges, u < v
};

ProperCheck check_proper(const Graph& g, std::span<const Color> colors);

struct BlockUsage {
  PaletteBlock block;
  std::int64_t used = 0;  // distinct colors of the block that appear
};

struct ColorCount {
  std::int64_t count = 0;  // distinct colors among colored nodes
  std::vector<BlockUsage> blocks;
  std::int64_t outside_blocks = 0;  // distinct colors in no block
};

ColorCount count_colors(const ColoringState& coloring);

struct ResidualMetrics {
  std::int64_t nodes = 0;
  std::int64_t max_out_degree = 0;
  std::int64_t longest_path = 0;
  bool acyclic = true;
};

// Residual = nodes with uncolored[v] != 0 under `orientation`.
ResidualMetrics residual_metrics(const Orientation& orientation, std::span<const char> uncolored);

struct VerifyConfig {
  double congest_c = 4.0;
  const Orientation* residual_orientation = nullptr;
  std::span<const char> residual_uncolored = {};
};

struct VerificationReport {
  bool proper = true;
  std::vector<Edge> violations;
  ColorCount colors;
  std::int64_t rounds = 0;
  std::int64_t messages = 0;
  std::int64_t max_payload_bits = 0;
  std::int64_t uncolored = 0;
  std::optional<ResidualMetrics> residual;
  std::int64_t congest_limit_bits = 0;  // ceil(c log2 n)
  bool congest_ok = true;               // reported, never fails a run

  bool ok() const { return proper && uncolored == 0; }
};

VerificationReport report(const Graph& g, const ColoringState& coloring, const RoundStats& stats,
                          const VerifyConfig& config = {});

}  // namespace arbcolor

#endif  // ARBCOLOR_VERIFY_H_
