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

#ifndef ARBCOLOR_LOW_ARB_H_
#define ARBCOLOR_LOW_ARB_H_

#include <cstdint>
#include <stdexcept>
#include <string>

#include "arbcolor/hpartition.h"
#include "arbcolor/layered_coloring.h"
#include "arbcolor/pipeline_types.h"
#include "arbcolor/simulator.h"

namespace arbcolor {

enum class LowArbVariant { kLogAlpha, kTradeoff };

std::string to_string(LowArbVariant variant);

struct LowArbConfig {
  LowArbVariant variant = LowArbVariant::kLogAlpha;
  double epsilon = 1.0;                // H-partition parameter used
  std::int64_t alpha = 1;
  std::int64_t d = 3;                  // H-partition degree
  std::int64_t iterations_per_layer = 4;
  Color palette_size = 6;
  std::int64_t proposals = 1;

  // logalpha: d = 3 alpha, palette d*ceil(log2 d), ceil(log2(d)/2) proposals,
  // 4 iterations. tradeoff: d = floor((2 + eps/2) alpha), palette
  // ceil((2+eps) alpha), 1 proposal, ceil(2(2+eps)/eps)*ceil(log2 d)
  // iterations.
  static LowArbConfig make(LowArbVariant variant, std::int64_t alpha, double epsilon = 1.0);

  // Colors never blocked in one iteration, given at most d blockers each able
  // to block `proposals` colors (1 for tradeoff).
  Color guaranteed_free_colors() const;
};

struct LowArbPartial {
  ColoringState coloring;
  HPartition partition;
  Orientation orientation;
  std::vector<StageRecord> stages;
  RoundStats stats;
};

// H-partition, orientation and the layered random partial coloring.
LowArbPartial low_arb_partial(const Graph& g, const LowArbConfig& config, const StageContext& ctx,
                              PaletteAllocator& palette, const std::string& stage_prefix = "");

class CycleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Longest directed path (edge count) in the orientation restricted to nodes
// with uncolored[v] != 0. Throws CycleError if that subgraph has a cycle.
std::int64_t longest_residual_path(const Orientation& orientation, std::span<const char> uncolored);

class FinisherError : public std::runtime_error {
 public:
  FinisherError(const std::string& what, NodeId node) : std::runtime_error(what), node(node) {}
  NodeId node;
};

struct FinishRun {
  std::vector<Color> colors;  // residual nodes, parent ids
  RoundStats stats;
  bool completed = true;
};

// Every residual node waits until all of its residual out-neighbors are
// colored, then takes the smallest color of the (d+1)-block they left free.
FinishRun deterministic_finish(const Graph& g, const Orientation& orientation,
                               std::span<const char> uncolored, std::int64_t d,
                               const PaletteBlock& block, const RunOptions& options = {});

// Partial coloring followed by the deterministic finisher.
PipelineResult color_low_arb(const Graph& g, std::int64_t alpha, LowArbVariant variant,
                             double epsilon, std::uint64_t seed);

// Same, continuing an existing palette allocation and applied to the
// subgraph of `g` with keep[v] != 0. Used as a finisher by other pipelines.
void color_low_arb_into(const Graph& g, std::span<const char> keep, std::int64_t alpha,
                        LowArbVariant variant, double epsilon, std::uint64_t seed,
                        PaletteAllocator& palette, PipelineResult& result,
                        const std::string& stage_prefix);

}  // namespace arbcolor

#endif  // ARBCOLOR_LOW_ARB_H_
