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

#include "arbcolor/pipeline_types.h"

#include <bit>
#include <cmath>

#include "arbcolor/rng.h"

namespace arbcolor {

RunOptions StageContext::options(std::string_view stage) const {
  RunOptions opts;
  opts.seed = stage_seed(seed, stage);
  opts.stream_keys = stream_keys;
  return opts;
}

std::uint64_t stage_seed(std::uint64_t seed, std::string_view stage) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : stage) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return hash_combine(seed, h);
}

std::int64_t residual_out_degree(const Orientation& orientation, std::span<const char> uncolored) {
  std::int64_t best = 0;
  for (NodeId v = 0; v < orientation.n(); ++v) {
    if (!uncolored[v]) continue;
    std::int64_t k = 0;
    for (NodeId u : orientation.out(v)) k += uncolored[u] ? 1 : 0;
    best = std::max(best, k);
  }
  return best;
}

std::int64_t ceil_tol(double x) { return static_cast<std::int64_t>(std::ceil(x - 1e-9)); }

std::int64_t ceil_log2(std::int64_t x) {
  if (x <= 1) return 0;
  return std::bit_width(static_cast<std::uint64_t>(x - 1));
}

}  // namespace arbcolor
