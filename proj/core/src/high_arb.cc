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

#include "arbcolor/high_arb.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "arbcolor/layered_coloring.h"
#include "arbcolor/linial.h"
#include "arbcolor/low_arb.h"

namespace arbcolor {

namespace {
constexpr std::uint64_t kTetSaturated = std::uint64_t{1} << 63;
}

std::uint64_t tetration2(std::int64_t height) {
  std::uint64_t t = 1;
  for (std::int64_t h = 0; h < height; ++h) {
    if (t >= 63) return kTetSaturated;
    t = std::uint64_t{1} << t;
  }
  return t;
}

double tetration(double base, std::int64_t height) {
  double t = 1.0;
  for (std::int64_t h = 0; h < height; ++h) {
    t = std::pow(base, t);
    if (!std::isfinite(t)) return std::numeric_limits<double>::infinity();
  }
  return t;
}

PhaseEntry phase_schedule(std::int64_t d, std::int64_t i) {
  if (d < 0 || i < 0) throw std::invalid_argument("phase_schedule: negative argument");
  PhaseEntry e;
  e.i = i;
  const std::uint64_t t = tetration2(i);
  if (t != kTetSaturated) {
    const auto ud = static_cast<std::uint64_t>(d);
    e.d_i = static_cast<std::int64_t>((ud + t - 1) / t);
  }
  e.q_i = i < 62 ? (12 * d) >> i : 0;
  e.f_i = e.d_i > 0 ? e.q_i / (2 * e.d_i) : 0;
  return e;
}

std::vector<PhaseEntry> phase_plan(std::int64_t d, double cutoff) {
  std::vector<PhaseEntry> plan;
  for (std::int64_t i = 0;; ++i) {
    auto e = phase_schedule(d, i);
    if (e.d_i < 1 || e.f_i < 1 || static_cast<double>(e.d_i) < cutoff) break;
    if (!plan.empty() && e.d_i >= plan.back().d_i) break;
    plan.push_back(e);
  }
  return plan;
}

double recompute_epsilon(std::int64_t i) {
  const std::uint64_t t = tetration2(i + 1);
  return 16.0 * tetration(1.98, i + 2) / static_cast<double>(t);
}

FirstStepConfig FirstStepConfig::make(std::int64_t alpha, double epsilon) {
  if (alpha < 1) throw std::invalid_argument("high-arb: alpha must be >= 1");
  if (epsilon <= 0) throw std::invalid_argument("high-arb: epsilon must be > 0");
  FirstStepConfig c;
  c.step_epsilon = epsilon / 3;
  c.d = hpartition_degree(alpha, c.step_epsilon);
  c.palette_size = ceil_tol((2 + 2 * c.step_epsilon) * static_cast<double>(alpha));
  const double e = c.step_epsilon;
  c.iterations_per_layer =
      ceil_tol(static_cast<double>(ceil_tol((1 + e) / e)) * std::log2(300 / e));
  return c;
}

PartialStep first_partial_coloring(const Graph& g, const HPartition& hp, std::int32_t layer_budget,
                                   const FirstStepConfig& config, PaletteAllocator& palette,
                                   const RunOptions& options, const std::string& stage) {
  PartialStep out;
  auto block = palette.allocate(stage, config.palette_size);
  LayeredColoringParams params;
  params.layer_budget = layer_budget;
  params.iterations_per_layer = config.iterations_per_layer;
  params.proposals = 1;
  params.palette_size = config.palette_size;
  params.pass_offsets = {block.offset};
  auto run = run_layered_coloring(g, hp, params, options);
  out.colors = std::move(run.colors);
  out.blocks.push_back(block);
  out.stats = std::move(run.stats);
  return out;
}

PartialStep second_partial_coloring_phase(const Graph& g, const HPartition& hp,
                                          std::int32_t layer_budget, const PhaseEntry& entry,
                                          PaletteAllocator& palette, const RunOptions& options,
                                          const std::string& stage) {
  if (entry.f_i < 1) throw std::invalid_argument("second partial coloring: f_i < 1");
  PartialStep out;
  LayeredColoringParams params;
  params.layer_budget = layer_budget;
  params.iterations_per_layer = 1;
  params.proposals = entry.f_i;
  params.palette_size = entry.q_i;
  params.pass_offsets.clear();
  for (int pass = 0; pass < 2; ++pass) {
    auto block = palette.allocate(stage + "/iter" + std::to_string(pass + 1), entry.q_i);
    params.pass_offsets.push_back(block.offset);
    out.blocks.push_back(block);
  }
  auto run = run_layered_coloring(g, hp, params, options);
  out.colors = std::move(run.colors);
  out.stats = std::move(run.stats);
  return out;
}

RecomputeResult recompute_h_partition(const Graph& residual, std::int64_t known_n,
                                      const PhaseEntry& next, std::int64_t i,
                                      const RunOptions& options) {
  RecomputeResult r;
  r.epsilon = recompute_epsilon(i);
  r.layer_budget = std::isfinite(r.epsilon) ? hpartition_layer_bound(known_n, r.epsilon) : 1;
  r.peel = peel_h_partition(residual, next.d_i, r.layer_budget, options);
  r.peel.partition.epsilon = r.epsilon;
  return r;
}

std::string to_string(HighArbFinisher finisher) {
  return finisher == HighArbFinisher::kLowArb ? "low-arb" : "linial";
}

HighArbFinisher parse_high_arb_finisher(const std::string& name) {
  if (name == "low-arb") return HighArbFinisher::kLowArb;
  if (name == "linial") return HighArbFinisher::kLinial;
  throw std::invalid_argument("unknown high-arb finisher: " + name);
}

namespace {

// Pipeline state over the parent graph.
struct Run {
  const Graph& g;
  std::int64_t alpha;
  double epsilon;
  std::uint64_t seed;
  HighArbResult out;
  PaletteAllocator palette;
  std::vector<char> uncolored;
  Orientation orientation;  // parent ids; only residual nodes matter

  Run(const Graph& graph, std::int64_t a, double eps, std::uint64_t s)
      : g(graph), alpha(a), epsilon(eps), seed(s),
        uncolored(static_cast<std::size_t>(graph.n()), 1) {
    out.pipeline.algorithm = "high-arb";
    out.pipeline.coloring.colors.assign(static_cast<std::size_t>(g.n()), kNoColor);
  }

  RunOptions options(const std::string& stage, std::span<const std::uint64_t> keys = {}) const {
    RunOptions o;
    o.seed = stage_seed(seed, stage);
    o.stream_keys = keys;
    return o;
  }

  std::int64_t uncolored_count() const {
    return std::count(uncolored.begin(), uncolored.end(), char{1});
  }

  void record(const std::string& stage, std::optional<PaletteBlock> block, const RoundStats& stats,
              std::int64_t residual_degree) {
    out.pipeline.add_stage({stage, std::move(block), stats.rounds, stats.messages,
                            stats.max_payload_bits, residual_degree, uncolored_count()},
                           stats);
  }

  void apply(const InducedSubgraph* sub, const PartialStep& step) {
    for (NodeId v = 0; v < static_cast<NodeId>(step.colors.size()); ++v) {
      if (step.colors[v] == kNoColor) continue;
      const NodeId p = sub ? sub->to_parent[v] : v;
      out.pipeline.coloring.colors[p] = step.colors[v];
      uncolored[p] = 0;
    }
    for (const auto& b : step.blocks) out.pipeline.coloring.blocks.push_back(b);
  }

  void lift(const InducedSubgraph& sub, const Orientation& child) {
    std::vector<std::vector<NodeId>> lists(static_cast<std::size_t>(g.n()));
    for (NodeId v = 0; v < child.n(); ++v) {
      for (NodeId u : child.out(v)) lists[sub.to_parent[v]].push_back(sub.to_parent[u]);
    }
    orientation = Orientation(std::move(lists));
  }
};

std::vector<std::uint64_t> keys_of(const InducedSubgraph& sub) {
  return {sub.to_parent.begin(), sub.to_parent.end()};
}

std::runtime_error relabel(const std::string& stage, const std::exception& e) {
  return std::runtime_error(stage + ": " + e.what());
}

}  // namespace

HighArbResult color_high_arb(const Graph& g, std::int64_t alpha, double epsilon,
                             std::uint64_t seed, const HighArbOptions& options) {
  if (alpha < 1) throw std::invalid_argument("high-arb: alpha must be >= 1");
  if (epsilon <= 0) throw std::invalid_argument("high-arb: epsilon must be > 0");
  Run run(g, alpha, epsilon, seed);
  auto& acc = run.out.accounting;
  const std::int64_t n = g.n();
  const double cutoff =
      options.phase_cutoff.value_or(n >= 2 ? 40.0 * std::log(static_cast<double>(n)) : 0.0);

  HPartition partition;
  std::int32_t partition_budget = 1;
  std::int64_t d = 0;

  if (!options.skip_first_step) {
    const auto cfg = FirstStepConfig::make(alpha, epsilon);
    HPartitionRun hp;
    try {
      hp = compute_h_partition(g, alpha, cfg.step_epsilon, run.options("step1/hpartition"));
    } catch (const InvalidAlphaError& e) {
      throw InvalidAlphaError(std::string("step1/hpartition: ") + e.what(), e.stuck_nodes, e.stats);
    }
    partition = std::move(hp.partition);
    partition_budget = hpartition_layer_bound(n, cfg.step_epsilon);
    run.orientation = orient_from_partition(g, partition);
    run.record("step1/hpartition", std::nullopt, hp.stats, run.orientation.max_out_degree());

    auto step = first_partial_coloring(g, partition, partition_budget, cfg, run.palette,
                                       run.options("step1/partial"), "step1/partial");
    run.apply(nullptr, step);
    run.record("step1/partial", step.blocks.front(), step.stats,
               residual_out_degree(run.orientation, run.uncolored));
    acc.step1_palette = cfg.palette_size;
    d = ceil_tol(epsilon / 144 * static_cast<double>(alpha));
  } else {
    HPartitionRun hp;
    try {
      hp = compute_h_partition(g, alpha, epsilon, run.options("step2/hpartition"));
    } catch (const InvalidAlphaError& e) {
      throw InvalidAlphaError(std::string("step2/hpartition: ") + e.what(), e.stuck_nodes, e.stats);
    }
    partition = std::move(hp.partition);
    partition_budget = hpartition_layer_bound(n, epsilon);
    run.orientation = orient_from_partition(g, partition);
    run.record("step2/hpartition", std::nullopt, hp.stats, run.orientation.max_out_degree());
    d = partition.d;
  }
  acc.step2_d = d;

  const auto plan = phase_plan(d, cutoff);
  std::size_t idx = 0;
  bool have_partition = false;
  InducedSubgraph sub = induced_subgraph(g, run.uncolored);
  HPartition phase_part;
  std::int32_t phase_budget = 1;

  // Fresh epsilon = 1 partition of the residual; re-enters the plan at the
  // largest phase >= from whose degree bound it meets.
  auto fallback = [&](std::size_t from, const std::string& why) {
    const std::int64_t a =
        std::max<std::int64_t>(1, residual_out_degree(run.orientation, run.uncolored));
    const std::string stage = "step2/fallback" + std::to_string(from);
    auto hp = compute_h_partition(sub.graph, a, 1.0, run.options(stage, keys_of(sub)), n);
    std::size_t target = plan.size();
    for (std::size_t j = from; j < plan.size() && plan[j].d_i >= hp.partition.d; ++j) target = j;
    auto child = orient_from_partition(sub.graph, hp.partition);
    run.lift(sub, child);
    run.record(stage, std::nullopt, hp.stats, child.max_out_degree());
    std::string event = stage + ": " + why + "; re-peeled with eps=1 (degree " +
                        std::to_string(hp.partition.d) + ")";
    if (target < plan.size()) {
      event += ", resuming at phase " + std::to_string(plan[target].i);
      phase_part = std::move(hp.partition);
      phase_budget = hpartition_layer_bound(n, 1.0);
      have_partition = true;
      idx = target;
    } else {
      event += ", no consistent phase left";
      have_partition = false;
      idx = plan.size();
    }
    run.out.pipeline.fallback_events.push_back(event);
  };

  if (!plan.empty() && sub.graph.n() > 0) {
    phase_part = restrict_partition(partition, sub);
    phase_part.d = plan[0].d_i;
    if (phase_part.ell == 0) phase_part.ell = 1;
    phase_budget = partition_budget;
    if (validate_h_partition(sub.graph, phase_part).pass) {
      have_partition = true;
    } else {
      fallback(0, "step1 residual exceeds phase 0 degree");
    }
  }

  while (have_partition && idx < plan.size()) {
    const auto entry = plan[idx];
    const std::string stage = "step2/phase" + std::to_string(entry.i);
    auto keys = keys_of(sub);
    auto step = second_partial_coloring_phase(sub.graph, phase_part, phase_budget, entry,
                                              run.palette, run.options(stage, keys), stage);
    run.lift(sub, orient_from_partition(sub.graph, phase_part));
    run.apply(&sub, step);
    PaletteBlock span{stage, step.blocks.front().offset, 2 * entry.q_i};
    run.record(stage, span, step.stats, residual_out_degree(run.orientation, run.uncolored));
    acc.step2_palette += 2 * entry.q_i;
    ++acc.phases_run;
    acc.phases.push_back({entry, run.out.pipeline.stages.back().residual_degree,
                          static_cast<double>(d) / (20 * tetration(1.98, entry.i + 2))});

    sub = induced_subgraph(g, run.uncolored);
    if (idx + 1 >= plan.size() || sub.graph.n() == 0) break;
    const auto& next = plan[idx + 1];
    const std::string rstage = "step2/recompute" + std::to_string(next.i);
    auto rkeys = keys_of(sub);
    auto rec = recompute_h_partition(sub.graph, n, next, entry.i, run.options(rstage, rkeys));
    if (rec.peel.complete()) {
      phase_part = std::move(rec.peel.partition);
      phase_budget = rec.layer_budget;
      auto child = orient_from_partition(sub.graph, phase_part);
      run.lift(sub, child);
      run.record(rstage, std::nullopt, rec.peel.stats, child.max_out_degree());
      ++idx;
    } else {
      run.record(rstage, std::nullopt, rec.peel.stats,
                 residual_out_degree(run.orientation, run.uncolored));
      fallback(idx + 1, "recompute stalled with " + std::to_string(rec.peel.stuck.size()) +
                            " nodes above degree " + std::to_string(next.d_i));
    }
  }

  // Finisher on the residual.
  sub = induced_subgraph(g, run.uncolored);
  run.out.pipeline.residual = ResidualSnapshot{run.uncolored, run.orientation};
  if (sub.graph.n() == 0) return std::move(run.out);

  if (options.finisher == HighArbFinisher::kLinial && !options.skip_first_step) {
    const std::string stage = "finisher/linial";
    auto o = restrict_orientation(run.orientation, sub);
    auto keys = keys_of(sub);
    LinialLoopResult lin;
    try {
      lin = linial_color_loop(sub.graph, o, std::max<std::int64_t>(1, o.max_out_degree()),
                              run.options(stage, keys));
    } catch (const std::exception& e) {
      throw relabel(stage, e);
    }
    auto block = run.palette.allocate(stage, lin.palette_sizes.back());
    PartialStep step;
    step.colors = std::move(lin.colors);
    for (auto& c : step.colors) c += block.offset;
    step.blocks.push_back(block);
    run.apply(&sub, step);
    run.record(stage, block, lin.stats, 0);
    return std::move(run.out);
  }

  const auto variant = options.tradeoff_finisher ? LowArbVariant::kTradeoff : LowArbVariant::kLogAlpha;
  const std::int64_t log_n = std::max<std::int64_t>(1, ceil_log2(n));
  std::int64_t a_r = std::min(alpha, log_n);
  const std::uint64_t fseed = stage_seed(seed, "finisher");
  for (;;) {
    try {
      color_low_arb_into(g, run.uncolored, a_r, variant, epsilon, fseed, run.palette,
                         run.out.pipeline, "finisher/");
      break;
    } catch (const InvalidAlphaError& e) {
      run.record("finisher/hpartition-stalled", std::nullopt, e.stats, 0);
      if (a_r >= alpha) {
        throw InvalidAlphaError(std::string("finisher: ") + e.what(), e.stuck_nodes, e.stats);
      }
      run.out.pipeline.fallback_events.push_back(
          "finisher: residual arboricity above " + std::to_string(a_r) + "; retrying with " +
          std::to_string(std::min(alpha, 2 * a_r)));
      a_r = std::min(alpha, 2 * a_r);
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (run.out.pipeline.coloring.colors[v] != kNoColor) run.uncolored[v] = 0;
  }
  return std::move(run.out);
}

}  // namespace arbcolor
