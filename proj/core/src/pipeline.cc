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

#include "arbcolor/pipeline.h"

#include <cmath>
#include <stdexcept>

#include "arbcolor/graph.h"
#include "arbcolor/linial.h"
#include "arbcolor/low_arb.h"

namespace arbcolor {

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGreedyOracle: return "greedy-oracle";
    case Algorithm::kBaseline: return "hpartition-linial-baseline";
    case Algorithm::kHighArb: return "high-arb";
    case Algorithm::kLowArbLogAlpha: return "low-arb-logalpha";
    case Algorithm::kLowArbTradeoff: return "low-arb-tradeoff";
    case Algorithm::kAutoDispatch: return "auto-dispatch";
  }
  return "unknown";
}

const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> all = {
      Algorithm::kGreedyOracle,   Algorithm::kBaseline,       Algorithm::kHighArb,
      Algorithm::kLowArbLogAlpha, Algorithm::kLowArbTradeoff, Algorithm::kAutoDispatch};
  return all;
}

Algorithm parse_algorithm(const std::string& name) {
  for (Algorithm a : all_algorithms()) {
    if (to_string(a) == name) return a;
  }
  if (name == "baseline") return Algorithm::kBaseline;
  throw std::invalid_argument("unknown algorithm: " + name);
}

Algorithm dispatch(std::int64_t n, std::int64_t alpha, double threshold) {
  const double lg = n >= 2 ? std::log2(static_cast<double>(n)) : 0.0;
  return static_cast<double>(alpha) >= threshold * lg ? Algorithm::kHighArb
                                                      : Algorithm::kLowArbLogAlpha;
}

PipelineResult run_greedy_oracle(const Graph& g, std::int64_t alpha) {
  PipelineResult r;
  r.algorithm = to_string(Algorithm::kGreedyOracle);
  r.coloring = greedy_degeneracy_coloring(g, alpha);
  StageRecord rec;
  rec.stage = "greedy-oracle";
  if (!r.coloring.blocks.empty()) rec.palette_block = r.coloring.blocks.front();
  r.stages.push_back(rec);
  return r;
}

PipelineResult run_baseline(const Graph& g, std::int64_t alpha, double epsilon, std::uint64_t seed) {
  PipelineResult r;
  r.algorithm = to_string(Algorithm::kBaseline);
  r.coloring.colors.assign(static_cast<std::size_t>(g.n()), kNoColor);
  StageContext ctx{seed, {}, g.n()};
  auto hp = compute_h_partition(g, alpha, epsilon, ctx.options("baseline/hpartition"));
  auto orientation = orient_from_partition(g, hp.partition);
  r.add_stage({"baseline/hpartition", std::nullopt, hp.stats.rounds, hp.stats.messages,
               hp.stats.max_payload_bits, orientation.max_out_degree(), g.n()},
              hp.stats);
  if (g.n() == 0) return r;

  auto lin = linial_color_loop(g, orientation, std::max<std::int64_t>(1, orientation.max_out_degree()),
                               ctx.options("baseline/linial"));
  PaletteAllocator palette;
  auto block = palette.allocate("baseline/linial", lin.palette_sizes.back());
  for (NodeId v = 0; v < g.n(); ++v) r.coloring.colors[v] = block.offset + lin.colors[v];
  r.coloring.blocks.push_back(block);
  r.add_stage({"baseline/linial", block, lin.stats.rounds, lin.stats.messages,
               lin.stats.max_payload_bits, 0, 0},
              lin.stats);
  return r;
}

AlgorithmRun run_algorithm(const Graph& g, const AlgorithmConfig& config) {
  AlgorithmRun out;
  Algorithm algo = config.algorithm;
  bool linear = false;
  if (algo == Algorithm::kAutoDispatch) {
    algo = dispatch(g.n(), config.alpha, config.dispatch_threshold);
    if (algo == Algorithm::kLowArbLogAlpha && config.goal == DispatchGoal::kLinear) {
      algo = Algorithm::kHighArb;
      linear = true;
    }
  }
  out.resolved = algo;
  switch (algo) {
    case Algorithm::kGreedyOracle:
      out.result = run_greedy_oracle(g, config.alpha);
      break;
    case Algorithm::kBaseline:
      out.result = run_baseline(g, config.alpha, config.epsilon, config.seed);
      break;
    case Algorithm::kHighArb: {
      HighArbOptions opts = config.high_arb;
      if (linear) {
        opts.skip_first_step = true;
        opts.tradeoff_finisher = true;
      }
      auto hr = color_high_arb(g, config.alpha, config.epsilon, config.seed, opts);
      out.result = std::move(hr.pipeline);
      out.high_arb = std::move(hr.accounting);
      if (linear) out.result.algorithm = "high-arb-linear";
      break;
    }
    case Algorithm::kLowArbLogAlpha:
      out.result = color_low_arb(g, config.alpha, LowArbVariant::kLogAlpha, config.epsilon, config.seed);
      break;
    case Algorithm::kLowArbTradeoff:
      out.result = color_low_arb(g, config.alpha, LowArbVariant::kTradeoff, config.epsilon, config.seed);
      break;
    case Algorithm::kAutoDispatch:
      break;
  }
  if (config.algorithm == Algorithm::kAutoDispatch) {
    out.result.algorithm = "auto-dispatch:" + out.result.algorithm;
  }
  if (out.result.stats.rounds > config.round_limit) out.result.completed = false;
  if (!out.result.coloring.is_total()) out.result.completed = false;
  return out;
}

}  // namespace arbcolor
