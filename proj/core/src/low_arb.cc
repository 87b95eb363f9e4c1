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

#include "arbcolor/low_arb.h"

#include <algorithm>
#include <queue>

#include "arbcolor/graph.h"

namespace arbcolor {

std::string to_string(LowArbVariant variant) {
  return variant == LowArbVariant::kLogAlpha ? "low-arb-logalpha" : "low-arb-tradeoff";
}

LowArbConfig LowArbConfig::make(LowArbVariant variant, std::int64_t alpha, double epsilon) {
  if (alpha < 1) throw std::invalid_argument("low-arb: alpha must be >= 1");
  LowArbConfig c;
  c.variant = variant;
  c.alpha = alpha;
  if (variant == LowArbVariant::kLogAlpha) {
    c.epsilon = 1.0;
    c.d = hpartition_degree(alpha, 1.0);
    const std::int64_t lg = ceil_log2(c.d);
    c.iterations_per_layer = 4;
    if (c.d <= 4) {
      c.proposals = 1;
      c.palette_size = std::max(c.d * lg, 2 * c.d);
    } else {
      c.palette_size = c.d * lg;
      // ceil(log2(d) / 2): smallest k with 4^k >= d
      std::int64_t k = 0;
      while ((std::int64_t{1} << (2 * k)) < c.d) ++k;
      c.proposals = k;
    }
  } else {
    if (epsilon <= 0) throw std::invalid_argument("low-arb: epsilon must be > 0");
    c.epsilon = epsilon / 2;
    c.d = hpartition_degree(alpha, c.epsilon);
    c.palette_size = ceil_tol((2 + epsilon) * static_cast<double>(alpha));
    c.proposals = 1;
    c.iterations_per_layer =
        ceil_tol(2 * (2 + epsilon) / epsilon) * std::max<std::int64_t>(1, ceil_log2(c.d));
  }
  return c;
}

Color LowArbConfig::guaranteed_free_colors() const { return palette_size - d * proposals; }

LowArbPartial low_arb_partial(const Graph& g, const LowArbConfig& config, const StageContext& ctx,
                              PaletteAllocator& palette, const std::string& stage_prefix) {
  const std::int64_t known_n = ctx.known_n > 0 ? ctx.known_n : g.n();
  LowArbPartial out;

  const std::string hp_stage = stage_prefix + "hpartition";
  auto hp_opts = ctx.options(hp_stage);
  auto hp = compute_h_partition(g, config.alpha, config.epsilon, hp_opts, known_n);
  out.partition = std::move(hp.partition);
  out.orientation = orient_from_partition(g, out.partition);
  out.stats += hp.stats;
  out.stages.push_back({hp_stage, std::nullopt, hp.stats.rounds, hp.stats.messages,
                        hp.stats.max_payload_bits, out.orientation.max_out_degree(), g.n()});

  const std::string color_stage = stage_prefix + "partial";
  PaletteBlock block = palette.allocate(color_stage, config.palette_size);
  LayeredColoringParams params;
  params.layer_budget = hpartition_layer_bound(known_n, config.epsilon);
  params.iterations_per_layer = config.iterations_per_layer;
  params.proposals = config.proposals;
  params.palette_size = config.palette_size;
  params.pass_offsets = {block.offset};
  auto run = run_layered_coloring(g, out.partition, params, ctx.options(color_stage));

  out.coloring.colors = std::move(run.colors);
  out.coloring.blocks.push_back(block);
  out.stats += run.stats;
  const auto residual = out.coloring.uncolored_mask();
  out.stages.push_back({color_stage, block, run.stats.rounds, run.stats.messages,
                        run.stats.max_payload_bits,
                        residual_out_degree(out.orientation, residual),
                        out.coloring.uncolored_count()});
  return out;
}

std::int64_t longest_residual_path(const Orientation& orientation, std::span<const char> uncolored) {
  const NodeId n = orientation.n();
  std::vector<std::int64_t> indeg(static_cast<std::size_t>(n), 0);
  std::int64_t members = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (!uncolored[v]) continue;
    ++members;
    for (NodeId u : orientation.out(v)) {
      if (uncolored[u]) ++indeg[u];
    }
  }
  // dist[v]: longest path ending at v
  std::vector<std::int64_t> dist(static_cast<std::size_t>(n), 0);
  std::queue<NodeId> ready;
  for (NodeId v = 0; v < n; ++v) {
    if (uncolored[v] && indeg[v] == 0) ready.push(v);
  }
  std::int64_t seen = 0;
  std::int64_t best = 0;
  while (!ready.empty()) {
    const NodeId v = ready.front();
    ready.pop();
    ++seen;
    best = std::max(best, dist[v]);
    for (NodeId u : orientation.out(v)) {
      if (!uncolored[u]) continue;
      dist[u] = std::max(dist[u], dist[v] + 1);
      if (--indeg[u] == 0) ready.push(u);
    }
  }
  if (seen != members) throw CycleError("longest_residual_path: residual orientation has a cycle");
  return best;
}

namespace {

class FinishProgram {
 public:
  struct State {
    std::int64_t waiting = 0;
    std::vector<Color> blocked;
  };

  FinishProgram(const Orientation& o, const PaletteBlock& block) : o_(o), block_(block) {}

  State init(NodeView& node) {
    State s;
    s.waiting = o_.out_degree(node.id);
    if (s.waiting > 0) node.out.sleep_until(kSleepForever);
    return s;
  }

  void on_round(State& s, NodeView& node, const Inbox& inbox) {
    for (const Message m : inbox) {
      if (!o_.points_to(node.id, m.from)) continue;
      --s.waiting;
      s.blocked.push_back(m.values[0]);
    }
    if (s.waiting > 0) {
      node.out.sleep_until(kSleepForever);
      return;
    }
    std::sort(s.blocked.begin(), s.blocked.end());
    Color pick = block_.offset;
    for (Color b : s.blocked) {
      if (b == pick) ++pick;
      else if (b > pick) break;
    }
    if (pick >= block_.end()) {
      throw FinisherError("deterministic finisher: block exhausted", node.id);
    }
    const std::int64_t payload[] = {pick};
    node.out.broadcast(payload, payload_bits(1, block_.size));
    node.out.halt(pick);
  }

 private:
  const Orientation& o_;
  const PaletteBlock& block_;
};

}  // namespace

FinishRun deterministic_finish(const Graph& g, const Orientation& orientation,
                               std::span<const char> uncolored, std::int64_t d,
                               const PaletteBlock& block, const RunOptions& options) {
  if (block.size < d + 1) throw std::invalid_argument("deterministic finisher: block smaller than d+1");
  FinishRun out;
  out.colors.assign(static_cast<std::size_t>(g.n()), kNoColor);
  std::vector<char> keep(uncolored.begin(), uncolored.end());
  auto sub = induced_subgraph(g, keep);
  if (sub.graph.n() == 0) return out;
  auto o = restrict_orientation(orientation, sub);
  if (o.max_out_degree() > d) {
    throw std::invalid_argument("deterministic finisher: residual out-degree exceeds d");
  }

  std::vector<std::uint64_t> keys(static_cast<std::size_t>(sub.graph.n()));
  for (NodeId v = 0; v < sub.graph.n(); ++v) {
    const NodeId parent = sub.to_parent[v];
    keys[v] = options.stream_keys.empty() ? static_cast<std::uint64_t>(parent)
                                          : options.stream_keys[parent];
  }
  RunOptions opts = options;
  opts.stream_keys = keys;
  opts.calendar_rounds = 0;

  FinishProgram program(o, block);
  auto run = arbcolor::run(sub.graph, program, opts);
  for (NodeId v = 0; v < sub.graph.n(); ++v) {
    if (run.outputs[v]) out.colors[sub.to_parent[v]] = *run.outputs[v];
  }
  out.stats = std::move(run.stats);
  out.completed = run.completed;
  return out;
}

namespace {

void finish_into(const Graph& g, const LowArbPartial& partial, const InducedSubgraph& sub,
                 std::int64_t d, const StageContext& ctx, PaletteAllocator& palette,
                 PipelineResult& result, const std::string& stage_prefix) {
  const std::string stage = stage_prefix + "finisher";
  auto residual = partial.coloring.uncolored_mask();
  PaletteBlock block = palette.allocate(stage, d + 1);
  auto fin = deterministic_finish(sub.graph, partial.orientation, residual, d, block,
                                  ctx.options(stage));
  for (NodeId v = 0; v < sub.graph.n(); ++v) {
    const NodeId p = sub.to_parent[v];
    if (partial.coloring.colors[v] != kNoColor) result.coloring.colors[p] = partial.coloring.colors[v];
    if (fin.colors[v] != kNoColor) result.coloring.colors[p] = fin.colors[v];
  }
  result.coloring.blocks.push_back(block);
  result.completed = result.completed && fin.completed;
  std::int64_t left = 0;
  for (NodeId v = 0; v < g.n(); ++v) left += result.coloring.colors[v] == kNoColor ? 1 : 0;
  result.add_stage({stage, block, fin.stats.rounds, fin.stats.messages, fin.stats.max_payload_bits,
                    0, left},
                   fin.stats);
}

}  // namespace

PipelineResult color_low_arb(const Graph& g, std::int64_t alpha, LowArbVariant variant,
                             double epsilon, std::uint64_t seed) {
  PipelineResult result;
  result.algorithm = to_string(variant);
  result.coloring.colors.assign(static_cast<std::size_t>(g.n()), kNoColor);
  PaletteAllocator palette;
  const auto config = LowArbConfig::make(variant, alpha, epsilon);
  StageContext ctx{seed, {}, g.n()};
  std::vector<char> all(static_cast<std::size_t>(g.n()), 1);
  auto sub = induced_subgraph(g, all);
  auto partial = low_arb_partial(sub.graph, config, ctx, palette);
  for (const auto& b : partial.coloring.blocks) result.coloring.blocks.push_back(b);
  for (std::size_t i = 0; i < partial.stages.size(); ++i) {
    result.stages.push_back(partial.stages[i]);
  }
  result.stats += partial.stats;
  result.residual = ResidualSnapshot{partial.coloring.uncolored_mask(), partial.orientation};
  finish_into(g, partial, sub, config.d, ctx, palette, result, "");
  return result;
}

void color_low_arb_into(const Graph& g, std::span<const char> keep, std::int64_t alpha,
                        LowArbVariant variant, double epsilon, std::uint64_t seed,
                        PaletteAllocator& palette, PipelineResult& result,
                        const std::string& stage_prefix) {
  if (result.coloring.colors.size() != static_cast<std::size_t>(g.n())) {
    result.coloring.colors.resize(static_cast<std::size_t>(g.n()), kNoColor);
  }
  std::vector<char> mask(keep.begin(), keep.end());
  auto sub = induced_subgraph(g, mask);
  if (sub.graph.n() == 0) return;
  std::vector<std::uint64_t> keys(sub.to_parent.begin(), sub.to_parent.end());
  StageContext ctx{seed, keys, g.n()};
  const auto config = LowArbConfig::make(variant, alpha, epsilon);
  auto partial = low_arb_partial(sub.graph, config, ctx, palette, stage_prefix);
  for (const auto& b : partial.coloring.blocks) result.coloring.blocks.push_back(b);
  for (const auto& s : partial.stages) result.stages.push_back(s);
  result.stats += partial.stats;
  finish_into(g, partial, sub, config.d, ctx, palette, result, stage_prefix);
}

}  // namespace arbcolor
