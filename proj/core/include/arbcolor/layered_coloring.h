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

#ifndef ARBCOLOR_LAYERED_COLORING_H_
#define ARBCOLOR_LAYERED_COLORING_H_

// Randomized layer-by-layer partial coloring shared by the arboricity
// algorithms. Layers of an H-partition are processed from the top layer down
// on a fixed calendar: in pass p, layer j owns a window of
// iterations_per_layer iterations, one round each. In an iteration, every
// uncolored node of the active layer proposes `proposals` distinct random
// colors from the pass's palette block and keeps the smallest proposal that
// no out-neighbor proposed in the same iteration and no neighbor holds.
// Commits are announced in the next round's message.

#include <cstdint>
#include <vector>

#include "arbcolor/hpartition.h"
#include "arbcolor/simulator.h"

namespace arbcolor {

struct LayeredColoringParams {
  std::int32_t layer_budget = 1;          // calendar layers; >= hp.ell
  std::int64_t iterations_per_layer = 1;
  std::int64_t proposals = 1;
  Color palette_size = 1;                 // per pass
  std::vector<Color> pass_offsets{0};     // one fresh block per pass

  std::int64_t calendar_rounds() const {
    return static_cast<std::int64_t>(pass_offsets.size()) * layer_budget * iterations_per_layer;
  }
};

struct LayeredColoringRun {
  std::vector<Color> colors;  // kNoColor for nodes left uncolored
  RoundStats stats;
};

LayeredColoringRun run_layered_coloring(const Graph& g, const HPartition& hp,
                                        const LayeredColoringParams& params,
                                        const RunOptions& options = {});

}  // namespace arbcolor

#endif  // ARBCOLOR_LAYERED_COLORING_H_
