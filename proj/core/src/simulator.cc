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

#include "arbcolor/simulator.h"

#include <bit>
#include <string>

namespace arbcolor {

RoundStats& RoundStats::operator+=(const RoundStats& other) {
  rounds += other.rounds;
  messages += other.messages;
  max_payload_bits = std::max(max_payload_bits, other.max_payload_bits);
  active_per_round.insert(active_per_round.end(), other.active_per_round.begin(),
                          other.active_per_round.end());
  return *this;
}

std::int64_t payload_bits(std::int64_t count, std::int64_t range) {
  if (count <= 0 || range <= 1) return 0;
  const auto width = std::bit_width(static_cast<std::uint64_t>(range - 1));
  return count * static_cast<std::int64_t>(width);
}

void Outbox::broadcast(std::span<const std::int64_t> values, std::int64_t bits) {
  engine_->broadcast(self_, values, bits);
}
void Outbox::send(NodeId to, std::span<const std::int64_t> values, std::int64_t bits) {
  engine_->send(self_, to, values, bits);
}
void Outbox::halt(std::optional<std::int64_t> output) { engine_->halt(self_, output); }
void Outbox::sleep_until(std::int64_t round) { engine_->sleep_until(self_, round); }

namespace detail {

Engine::Engine(const Graph& g, const RunOptions& options) : g_(g) {
  const auto n = static_cast<std::size_t>(g.n());
  if (!options.stream_keys.empty() && options.stream_keys.size() != n) {
    throw std::invalid_argument("run: stream_keys size must equal n");
  }
  rngs_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t key = options.stream_keys.empty() ? v : options.stream_keys[v];
    rngs_.emplace_back(options.seed, key);
  }
  halted_.assign(n, 0);
  outputs_.assign(n, std::nullopt);
  wake_round_.assign(n, 0);
  inbox_cur_.resize(n);
  inbox_next_.resize(n);
  live_ = static_cast<std::int64_t>(n);
}

const std::vector<NodeId>& Engine::collect(std::int64_t round) {
  step_list_.clear();
  for (NodeId v : awake_) {
    if (!halted_[v]) step_list_.push_back(v);
  }
  for (NodeId v : touched_cur_) {
    if (!halted_[v]) step_list_.push_back(v);
  }
  if (auto it = wake_buckets_.find(round); it != wake_buckets_.end()) {
    for (NodeId v : it->second) {
      if (!halted_[v] && wake_round_[v] == round) step_list_.push_back(v);
    }
    wake_buckets_.erase(it);
  }
  std::sort(step_list_.begin(), step_list_.end());
  step_list_.erase(std::unique(step_list_.begin(), step_list_.end()), step_list_.end());
  for (NodeId v : step_list_) {
    if (wake_round_[v] <= round) wake_round_[v] = 0;
  }
  current_round_ = round;
  if (stats_.active_per_round.size() < static_cast<std::size_t>(round)) {
    stats_.active_per_round.resize(static_cast<std::size_t>(round), 0);
  }
  stats_.active_per_round[round - 1] = static_cast<std::int64_t>(step_list_.size());
  return step_list_;
}

Inbox Engine::inbox(NodeId v) const {
  return Inbox(inbox_cur_[v], arena_cur_.data());
}

void Engine::end_step(NodeId v) {
  stepping_ = -1;
  if (halted_[v]) return;
  if (wake_round_[v] > current_round_) return;  // sleeping
  wake_round_[v] = 0;
  awake_next_.push_back(v);
}

void Engine::finish_round(std::int64_t round) {
  for (NodeId v : touched_cur_) inbox_cur_[v].clear();
  std::swap(inbox_cur_, inbox_next_);
  touched_cur_.swap(touched_next_);
  touched_next_.clear();
  arena_cur_.swap(arena_next_);
  arena_next_.clear();
  awake_.swap(awake_next_);
  awake_next_.clear();
  current_round_ = round + 1;
}

std::optional<std::int64_t> Engine::next_busy_round(std::int64_t after) {
  for (NodeId v : awake_) {
    if (!halted_[v]) return after + 1;
  }
  for (NodeId v : touched_cur_) {
    if (!halted_[v]) return after + 1;
  }
  while (!wake_buckets_.empty()) {
    auto it = wake_buckets_.begin();
    const std::int64_t r = it->first;
    bool valid = false;
    for (NodeId v : it->second) {
      if (!halted_[v] && wake_round_[v] == r) {
        valid = true;
        break;
      }
    }
    if (valid && r > after) return r;
    wake_buckets_.erase(it);
  }
  return std::nullopt;
}

void Engine::deliver(NodeId to, NodeId from, std::uint32_t offset, std::uint32_t length) {
  if (halted_[to]) return;
  auto& box = inbox_next_[to];
  if (box.empty()) touched_next_.push_back(to);
  box.push_back({from, offset, length});
}

void Engine::broadcast(NodeId from, std::span<const std::int64_t> values, std::int64_t bits) {
  if (halted_[from]) throw std::logic_error("halted node " + std::to_string(from) + " sent a payload");
  const auto offset = static_cast<std::uint32_t>(arena_next_.size());
  arena_next_.insert(arena_next_.end(), values.begin(), values.end());
  const auto length = static_cast<std::uint32_t>(values.size());
  const auto nb = g_.neighbors(from);
  stats_.messages += static_cast<std::int64_t>(nb.size());
  if (!nb.empty()) stats_.max_payload_bits = std::max(stats_.max_payload_bits, bits);
  for (NodeId u : nb) deliver(u, from, offset, length);
}

void Engine::send(NodeId from, NodeId to, std::span<const std::int64_t> values, std::int64_t bits) {
  if (halted_[from]) throw std::logic_error("halted node " + std::to_string(from) + " sent a payload");
  if (!g_.has_edge(from, to)) {
    throw std::logic_error("node " + std::to_string(from) + " sent to non-neighbor " + std::to_string(to));
  }
  const auto offset = static_cast<std::uint32_t>(arena_next_.size());
  arena_next_.insert(arena_next_.end(), values.begin(), values.end());
  ++stats_.messages;
  stats_.max_payload_bits = std::max(stats_.max_payload_bits, bits);
  deliver(to, from, offset, static_cast<std::uint32_t>(values.size()));
}

void Engine::halt(NodeId v, std::optional<std::int64_t> output) {
  if (halted_[v]) throw std::logic_error("node " + std::to_string(v) + " halted twice");
  halted_[v] = 1;
  outputs_[v] = output;
  --live_;
}

void Engine::sleep_until(NodeId v, std::int64_t round) {
  if (round <= current_round_) {
    wake_round_[v] = 0;
    return;
  }
  wake_round_[v] = round;
  if (round != kSleepForever) wake_buckets_[round].push_back(v);
}

RunResult Engine::take_result(bool completed) {
  RunResult result;
  result.completed = completed && live_ == 0;
  for (NodeId v = 0; v < g_.n(); ++v) {
    if (!halted_[v]) result.unhalted.push_back(v);
  }
  result.outputs = std::move(outputs_);
  result.stats = std::move(stats_);
  return result;
}

}  // namespace detail
}  // namespace arbcolor
