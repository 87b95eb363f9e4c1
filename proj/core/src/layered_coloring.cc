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

#include "arbcolor/layered_coloring.h"

#include <algorithm>
#include <string>

#include "arbcolor/rng.h"

namespace arbcolor {
namespace {

constexpr std::int64_t kPropose = 0;
constexpr std::int64_t kCommit = 1;

class LayeredProgram {
 public:
  struct State {
    std::int32_t pass = 0;
    std::int64_t decide_round = -1;   // round where outstanding proposals resolve
    std::int64_t window_end = 0;
    std::vector<Color> proposals;
    std::vector<Color> taken;         // colors held by neighbors
  };

  LayeredProgram(const HPartition& hp, const LayeredColoringParams& params)
      : hp_(hp), params_(params) {}

  State init(NodeView& node) {
    State s;
    enter_pass(s, node, 0);
    return s;
  }

  void on_round(State& s, NodeView& node, const Inbox& inbox) {
    const bool deciding = s.decide_round == node.round;
    out_proposals_.clear();
    for (const Message& msg : inbox) {
      if (msg.values[0] == kCommit) {
        s.taken.push_back(msg.values[1]);
      } else if (deciding && is_out_neighbor(node.id, msg.from)) {
        out_proposals_.insert(out_proposals_.end(), msg.values.begin() + 1, msg.values.end());
      }
    }
    if (deciding) {
      decide(s, node);
    } else if (s.decide_round == node.round + 1 && s.proposals.empty()) {
      propose(s, node);
    }
  }

 private:
  bool is_out_neighbor(NodeId self, NodeId other) const {
    const auto a = hp_.layer[self];
    const auto b = hp_.layer[other];
    return b > a || (b == a && other > self);
  }

  std::int64_t window_start(std::int32_t pass, std::int32_t layer) const {
    const std::int64_t per_pass = static_cast<std::int64_t>(params_.layer_budget) * params_.iterations_per_layer;
    return pass * per_pass + (params_.layer_budget - layer) * params_.iterations_per_layer + 1;
  }

  // Schedules the first proposal of `pass` one round before its window.
  void enter_pass(State& s, NodeView& node, std::int32_t pass) {
    s.pass = pass;
    const std::int64_t start = window_start(pass, hp_.layer[node.id]);
    s.window_end = start + params_.iterations_per_layer - 1;
    s.decide_round = start;
    s.proposals.clear();
    if (start - 1 == node.round) {
      propose(s, node);
    } else {
      node.out.sleep_until(start - 1);
    }
  }

  void propose(State& s, NodeView& node) {
    const Color offset = params_.pass_offsets[static_cast<std::size_t>(s.pass)];
    auto picks = sample_distinct(node.rng, params_.proposals, params_.palette_size);
    s.proposals.clear();
    payload_.assign(1, kPropose);
    for (auto p : picks) {
      s.proposals.push_back(offset + p);
      payload_.push_back(offset + p);
    }
    s.decide_round = node.round + 1;
    node.out.broadcast(payload_, 1 + payload_bits(params_.proposals, params_.palette_size));
    node.out.sleep_until(s.decide_round);
  }

  void decide(State& s, NodeView& node) {
    std::sort(out_proposals_.begin(), out_proposals_.end());
    for (Color x : s.proposals) {
      if (std::binary_search(out_proposals_.begin(), out_proposals_.end(), x)) continue;
      if (std::find(s.taken.begin(), s.taken.end(), x) != s.taken.end()) continue;
      const std::int64_t payload[] = {kCommit, x};
      node.out.broadcast(payload, 1 + payload_bits(1, params_.palette_size));
      node.out.halt(x);
      return;
    }
    s.proposals.clear();
    if (node.round < s.window_end) {
      propose(s, node);
    } else if (s.pass + 1 < static_cast<std::int32_t>(params_.pass_offsets.size())) {
      enter_pass(s, node, s.pass + 1);
    } else {
      node.out.halt(std::nullopt);
    }
  }

  const HPartition& hp_;
  const LayeredColoringParams& params_;
  std::vector<Color> out_proposals_;
  std::vector<std::int64_t> payload_;
};

}  // namespace

LayeredColoringRun run_layered_coloring(const Graph& g, const HPartition& hp,
                                        const LayeredColoringParams& params,
                                        const RunOptions& options) {
  if (params.pass_offsets.empty()) throw std::invalid_argument("layered coloring: no passes");
  if (params.proposals < 1 || params.proposals > params.palette_size) {
    throw std::invalid_argument("layered coloring: need 1 <= proposals <= palette_size");
  }
  if (params.iterations_per_layer < 1) throw std::invalid_argument("layered coloring: no iterations");
  for (NodeId v = 0; v < g.n(); ++v) {
    if (hp.layer[v] < 1 || hp.layer[v] > params.layer_budget) {
      throw std::invalid_argument("layered coloring: node " + std::to_string(v) +
                                  " has layer outside the calendar");
    }
  }
  LayeredProgram program(hp, params);
  RunOptions opts = options;
  opts.calendar_rounds = params.calendar_rounds();
  opts.round_limit = std::max(opts.round_limit, opts.calendar_rounds + 1);
  auto r = run(g, program, opts);
  LayeredColoringRun out;
  out.colors.assign(static_cast<std::size_t>(g.n()), kNoColor);
  for (NodeId v = 0; v < g.n(); ++v) {
    if (r.outputs[v]) out.colors[v] = *r.outputs[v];
  }
  out.stats = std::move(r.stats);
  return out;
}

}  // namespace arbcolor
