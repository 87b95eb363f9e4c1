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

#ifndef ARBCOLOR_SIMULATOR_H_
#define ARBCOLOR_SIMULATOR_H_

// Synchronous round-based message passing (LOCAL model, with CONGEST payload
// accounting).
//
// A node program P supplies
//
//   using State = ...;
//   State init(NodeView& node);                       // round 0
//   void on_round(State& s, NodeView& node, const Inbox& inbox);
//
// Messages sent during round r are delivered in the inboxes of round r + 1.
// A node may halt (fixing its output), or sleep until a given round; a
// sleeping node is also woken by any incoming message. Nodes are stepped in
// increasing id order within a round, and each node draws randomness only
// from its own RngStream, so a run is a pure function of (graph, program,
// options).

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "arbcolor/graph.h"
#include "arbcolor/rng.h"

namespace arbcolor {

struct RoundStats {
  std::int64_t rounds = 0;
  std::int64_t messages = 0;
  std::int64_t max_payload_bits = 0;
  // Nodes stepped in each round 1..rounds.
  std::vector<std::int64_t> active_per_round;

  // Sequential composition: rounds and messages add, payload takes the max.
  RoundStats& operator+=(const RoundStats& other);
};

// Canonical payload size: `count` integers drawn from a range of `range`
// distinct values cost ceil(log2(range)) bits each. List overhead is ignored.
std::int64_t payload_bits(std::int64_t count, std::int64_t range);

// Values every node knows before round 0.
struct GlobalKnowledge {
  std::int64_t n = 0;
  std::int64_t alpha = 1;
  double epsilon = 1.0;
};

struct Message {
  NodeId from;
  std::span<const std::int64_t> values;
};

class Inbox {
 public:
  struct Envelope {
    NodeId from;
    std::uint32_t offset;
    std::uint32_t length;
  };

  class Iterator {
   public:
    Iterator(const Envelope* e, const std::int64_t* arena) : e_(e), arena_(arena) {}
    Message operator*() const { return {e_->from, {arena_ + e_->offset, e_->length}}; }
    Iterator& operator++() {
      ++e_;
      return *this;
    }
    bool operator!=(const Iterator& o) const { return e_ != o.e_; }

   private:
    const Envelope* e_;
    const std::int64_t* arena_;
  };

  Inbox(std::span<const Envelope> envelopes, const std::int64_t* arena)
      : envelopes_(envelopes), arena_(arena) {}

  Iterator begin() const { return {envelopes_.data(), arena_}; }
  Iterator end() const { return {envelopes_.data() + envelopes_.size(), arena_}; }
  std::size_t size() const { return envelopes_.size(); }
  bool empty() const { return envelopes_.empty(); }

 private:
  std::span<const Envelope> envelopes_;
  const std::int64_t* arena_;
};

inline constexpr std::int64_t kSleepForever = std::numeric_limits<std::int64_t>::max();

namespace detail {
class Engine;
}

// Actions a node may take during its step.
class Outbox {
 public:
  void broadcast(std::span<const std::int64_t> values, std::int64_t bits);
  void send(NodeId to, std::span<const std::int64_t> values, std::int64_t bits);
  void halt(std::optional<std::int64_t> output = std::nullopt);
  // Skip steps until `round` (or until a message arrives).
  void sleep_until(std::int64_t round);

 private:
  friend class detail::Engine;
  Outbox(detail::Engine* engine, NodeId self) : engine_(engine), self_(self) {}
  detail::Engine* engine_;
  NodeId self_;
};

struct NodeView {
  NodeId id;
  std::span<const NodeId> neighbors;
  std::int64_t round;
  RngStream& rng;
  Outbox& out;
};

template <class P>
concept NodeProgram = requires(P& p, typename P::State& s, NodeView& view,
                               const Inbox& inbox) {
  { p.init(view) } -> std::same_as<typename P::State>;
  { p.on_round(s, view, inbox) };
};

struct RunOptions {
  std::uint64_t seed = 0;
  std::int64_t round_limit = 1'000'000;
  // Per-node key for the random substream; defaults to the node id. Lets a
  // subgraph run reuse the parent graph's streams.
  std::span<const std::uint64_t> stream_keys = {};
  // Length of the global schedule slot this run occupies. Reported rounds are
  // max(last busy round, calendar_rounds).
  std::int64_t calendar_rounds = 0;
};

struct RunResult {
  std::vector<std::optional<std::int64_t>> outputs;
  RoundStats stats;
  // False when round_limit was reached (or every remaining node sleeps
  // forever) with unhalted nodes; outputs then hold only halted nodes' values.
  bool completed = true;
  std::vector<NodeId> unhalted;
};

namespace detail {

// Message routing and scheduling shared by all program types.
class Engine {
 public:
  Engine(const Graph& g, const RunOptions& options);

  // Nodes to step in `round`, ascending. Empty when nothing is scheduled.
  const std::vector<NodeId>& collect(std::int64_t round);
  Inbox inbox(NodeId v) const;
  void begin_step(NodeId v) { stepping_ = v; }
  void end_step(NodeId v);
  void finish_round(std::int64_t round);
  // Next round where anything can happen, or nullopt when idle forever.
  std::optional<std::int64_t> next_busy_round(std::int64_t after);

  void broadcast(NodeId from, std::span<const std::int64_t> values, std::int64_t bits);
  void send(NodeId from, NodeId to, std::span<const std::int64_t> values, std::int64_t bits);
  void halt(NodeId v, std::optional<std::int64_t> output);
  void sleep_until(NodeId v, std::int64_t round);

  bool all_halted() const { return live_ == 0; }
  RunResult take_result(bool completed);
  RngStream& rng(NodeId v) { return rngs_[v]; }
  Outbox make_outbox(NodeId v) { return Outbox(this, v); }
  RoundStats& stats() { return stats_; }

 private:
  void deliver(NodeId to, NodeId from, std::uint32_t offset, std::uint32_t length);

  const Graph& g_;
  std::vector<RngStream> rngs_;
  std::vector<char> halted_;
  std::vector<std::optional<std::int64_t>> outputs_;
  std::vector<std::int64_t> wake_round_;  // 0 = awake every round
  std::map<std::int64_t, std::vector<NodeId>> wake_buckets_;
  std::vector<NodeId> awake_;
  std::vector<NodeId> awake_next_;
  std::vector<std::vector<Inbox::Envelope>> inbox_cur_, inbox_next_;
  std::vector<NodeId> touched_cur_, touched_next_;
  std::vector<std::int64_t> arena_cur_, arena_next_;
  std::vector<NodeId> step_list_;
  NodeId stepping_ = -1;
  std::int64_t current_round_ = 0;
  std::int64_t live_ = 0;
  RoundStats stats_;
};

}  // namespace detail

// Executes `program` until every node halts or round_limit rounds elapse.
template <NodeProgram P>
RunResult run(const Graph& g, P& program, const RunOptions& options = {}) {
  if (options.round_limit < 1) throw std::invalid_argument("run: round_limit must be >= 1");
  detail::Engine engine(g, options);
  using State = typename P::State;
  std::vector<State> states;
  states.reserve(static_cast<std::size_t>(g.n()));
  for (NodeId v = 0; v < g.n(); ++v) {
    Outbox out = engine.make_outbox(v);
    NodeView view{v, g.neighbors(v), 0, engine.rng(v), out};
    engine.begin_step(v);
    states.push_back(program.init(view));
    engine.end_step(v);
  }
  engine.finish_round(0);

  std::int64_t round = 0;
  bool completed = true;
  while (!engine.all_halted()) {
    auto next = engine.next_busy_round(round);
    if (!next) {
      completed = false;
      break;
    }
    if (*next > options.round_limit) {
      completed = false;
      round = options.round_limit;
      break;
    }
    round = *next;
    for (NodeId v : engine.collect(round)) {
      Outbox out = engine.make_outbox(v);
      NodeView view{v, g.neighbors(v), round, engine.rng(v), out};
      engine.begin_step(v);
      program.on_round(states[v], view, engine.inbox(v));
      engine.end_step(v);
    }
    engine.finish_round(round);
  }
  auto& stats = engine.stats();
  stats.rounds = std::max(round, options.calendar_rounds);
  stats.active_per_round.resize(static_cast<std::size_t>(stats.rounds), 0);
  return engine.take_result(completed);
}

}  // namespace arbcolor

#endif  // ARBCOLOR_SIMULATOR_H_
