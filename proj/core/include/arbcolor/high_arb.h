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

#ifndef ARBCOLOR_HIGH_ARB_H_
#define ARBCOLOR_HIGH_ARB_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arbcolor/coloring.h"
#include "arbcolor/hpartition.h"
#include "arbcolor/pipeline_types.h"

namespace arbcolor {

// Tower of `height` twos, saturating at 2^63 (returned as UINT64 2^63).
std::uint64_t tetration2(std::int64_t height);
// Real-valued tower of `height` copies of `base`; +inf once it overflows.
double tetration(double base, std::int64_t height);

struct PhaseEntry {
  std::int64_t i = 0;
  std::int64_t d_i = 0;  // ceil(d / tet(i)), 0 once tet(i) saturates
  std::int64_t q_i = 0;  // floor(12 d / 2^i)
  std::int64_t f_i = 0;  // floor(q_i / (2 d_i)), 0 when d_i = 0
};

PhaseEntry phase_schedule(std::int64_t d, std::int64_t i);

// Phases 0, 1, ... while f_i >= 1 and d_i >= cutoff.
std::vector<PhaseEntry> phase_plan(std::int64_t d, double cutoff);

// Peeling parameter of the recomputed partition before phase i+1:
// 16 * tet_1.98(i+2) / tet(i+1).
double recompute_epsilon(std::int64_t i);

struct FirstStepConfig {
  double step_epsilon = 1.0 / 3;  // epsilon / 3
  std::int64_t d = 0;             // floor((2 + step_epsilon) alpha)
  Color palette_size = 0;         // ceil((2 + 2 step_epsilon) alpha)
  std::int64_t iterations_per_layer = 0;  // ceil(ceil((1+e)/e) log2(300/e))
  static FirstStepConfig make(std::int64_t alpha, double epsilon);
};

struct PartialStep {
  std::vector<Color> colors;  // kNoColor when uncolored
  std::vector<PaletteBlock> blocks;
  RoundStats stats;
};

// One-proposal layered coloring of Step 1 over a given partition.
PartialStep first_partial_coloring(const Graph& g, const HPartition& hp, std::int32_t layer_budget,
                                   const FirstStepConfig& config, PaletteAllocator& palette,
                                   const RunOptions& options, const std::string& stage);

// Two iterations over the partition, each with a fresh q_i block and f_i
// proposals per node.
PartialStep second_partial_coloring_phase(const Graph& g, const HPartition& hp,
                                          std::int32_t layer_budget, const PhaseEntry& entry,
                                          PaletteAllocator& palette, const RunOptions& options,
                                          const std::string& stage);

// Re-peels the residual with threshold d_{i+1} and the layer budget of
// recompute_epsilon(i). Returns the peel (possibly stalled) and the budget.
struct RecomputeResult {
  PeelResult peel;
  std::int32_t layer_budget = 1;
  double epsilon = 1.0;
};
RecomputeResult recompute_h_partition(const Graph& residual, std::int64_t known_n,
                                      const PhaseEntry& next, std::int64_t i,
                                      const RunOptions& options);

enum class HighArbFinisher { kLowArb, kLinial };
std::string to_string(HighArbFinisher finisher);
HighArbFinisher parse_high_arb_finisher(const std::string& name);

struct HighArbOptions {
  HighArbFinisher finisher = HighArbFinisher::kLowArb;
  // Phases with d_i below this are not run; default 40 ln n.
  std::optional<double> phase_cutoff;
  // Skip Step 1 and run the phases on G itself with d = floor((2+eps) alpha).
  bool skip_first_step = false;
  // Finisher for skip_first_step: the tradeoff variant instead of logalpha.
  bool tradeoff_finisher = false;
};

struct PhaseRecord {
  PhaseEntry entry;
  std::int64_t residual_degree = 0;  // measured after the phase
  // d / (20 tet_1.98(i+2)), the analysis threshold; recorded only
  double fine_threshold = 0;
};

struct HighArbAccounting {
  Color step1_palette = 0;
  std::int64_t step2_d = 0;
  Color step2_palette = 0;   // total of the phase blocks allocated
  std::int64_t phases_run = 0;
  std::vector<PhaseRecord> phases;
};

struct HighArbResult {
  PipelineResult pipeline;
  HighArbAccounting accounting;
};

HighArbResult color_high_arb(const Graph& g, std::int64_t alpha, double epsilon,
                             std::uint64_t seed, const HighArbOptions& options = {});

}  // namespace arbcolor

#endif  // ARBCOLOR_HIGH_ARB_H_
