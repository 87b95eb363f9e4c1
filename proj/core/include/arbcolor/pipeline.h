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

#ifndef ARBCOLOR_PIPELINE_H_
#define ARBCOLOR_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arbcolor/high_arb.h"
#include "arbcolor/pipeline_types.h"

namespace arbcolor {

enum class Algorithm {
  kGreedyOracle,
  kBaseline,  // H-partition + Linial color reduction, O(alpha^2) colors
  kHighArb,
  kLowArbLogAlpha,
  kLowArbTradeoff,
  kAutoDispatch,
};

std::string to_string(Algorithm algorithm);
Algorithm parse_algorithm(const std::string& name);
const std::vector<Algorithm>& all_algorithms();

enum class DispatchGoal {
  kFast,    // low-arb-logalpha below the threshold
  kLinear,  // phased coloring on G, then the tradeoff variant
};

struct AlgorithmConfig {
  Algorithm algorithm = Algorithm::kAutoDispatch;
  std::int64_t alpha = 1;
  double epsilon = 1.0;
  std::uint64_t seed = 0;
  std::int64_t round_limit = 1'000'000;
  // auto-dispatch picks high-arb when alpha >= threshold * log2 n
  double dispatch_threshold = 40.0;
  DispatchGoal goal = DispatchGoal::kFast;
  HighArbOptions high_arb;
};

struct AlgorithmRun {
  PipelineResult result;
  Algorithm resolved = Algorithm::kGreedyOracle;  // after dispatch
  std::optional<HighArbAccounting> high_arb;
};

// Which algorithm auto-dispatch runs for (n, alpha).
Algorithm dispatch(std::int64_t n, std::int64_t alpha, double threshold);

PipelineResult run_baseline(const Graph& g, std::int64_t alpha, double epsilon, std::uint64_t seed);
PipelineResult run_greedy_oracle(const Graph& g, std::int64_t alpha);

AlgorithmRun run_algorithm(const Graph& g, const AlgorithmConfig& config);

}  // namespace arbcolor

#endif  // ARBCOLOR_PIPELINE_H_
