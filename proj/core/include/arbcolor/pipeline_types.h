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

#ifndef ARBCOLOR_PIPELINE_TYPES_H_
#define ARBCOLOR_PIPELINE_TYPES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arbcolor/coloring.h"
#include "arbcolor/hpartition.h"
#include "arbcolor/simulator.h"

namespace arbcolor {

// One stage of a coloring pipeline, in execution order.
struct StageRecord {
  std::string stage;
  std::optional<PaletteBlock> palette_block;
  std::int64_t rounds = 0;
  std::int64_t messages = 0;
  std::int64_t max_payload_bits = 0;
  // Max out-degree among nodes still uncolored after the stage (for
  // orientation stages: the orientation's max out-degree).
  std::int64_t residual_degree = 0;
  std::int64_t uncolored_after = 0;
};

// Uncolored nodes and orientation just before the finishing stage.
struct ResidualSnapshot {
  std::vector<char> uncolored;
  Orientation orientation;
};

struct PipelineResult {
  std::string algorithm;
  ColoringState coloring;
  std::vector<StageRecord> stages;
  std::vector<std::string> fallback_events;
  RoundStats stats;
  std::optional<ResidualSnapshot> residual;
  bool completed = true;

  void add_stage(StageRecord record, const RoundStats& stage_stats) {
    stats += stage_stats;
    stages.push_back(std::move(record));
  }
};

// Identifies a stage's random streams: nodes of a subgraph keep their
// parent-graph keys and the parent's n stays the globally known size.
struct StageContext {
  std::uint64_t seed = 0;
  std::span<const std::uint64_t> stream_keys = {};
  std::int64_t known_n = 0;

  RunOptions options(std::string_view stage) const;
};

// Seed of a named stage (FNV-1a of the name mixed with the run seed).
std::uint64_t stage_seed(std::uint64_t seed, std::string_view stage);

// Max over nodes with uncolored[v] of their uncolored out-neighbors.
std::int64_t residual_out_degree(const Orientation& orientation, std::span<const char> uncolored);

// ceil(x) that ignores floating noise below 1e-9.
std::int64_t ceil_tol(double x);
// ceil(log2(x)) for x >= 1.
std::int64_t ceil_log2(std::int64_t x);

}  // namespace arbcolor

#endif  // ARBCOLOR_PIPELINE_TYPES_H_
