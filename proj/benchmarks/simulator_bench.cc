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

#include <benchmark/benchmark.h>

#include <cstdint>

#include "arbcolor/generators.h"
#include "arbcolor/simulator.h"

namespace arbcolor {
namespace {

// Every node broadcasts its id for a fixed number of rounds.
struct Flood {
  struct State {
    std::int64_t rounds_left = 0;
    std::int64_t sum = 0;
  };
  std::int64_t rounds = 1;

  State init(NodeView& view) {
    State s;
    s.rounds_left = rounds;
    const std::int64_t payload[1] = {view.id};
    view.out.broadcast(payload, 32);
    return s;
  }
  void on_round(State& s, NodeView& view, const Inbox& inbox) {
    for (const Message m : inbox) s.sum += m.values.front();
    if (--s.rounds_left <= 0) {
      view.out.halt();
      return;
    }
    const std::int64_t payload[1] = {s.sum & 0xffff};
    view.out.broadcast(payload, 16);
  }
};

void BM_FloodRounds(benchmark::State& state) {
  const auto g = union_of_random_forests(static_cast<NodeId>(state.range(0)), 4, 1);
  Flood program;
  program.rounds = 8;
  std::int64_t messages = 0;
  for (auto _ : state) {
    auto result = run(g, program);
    messages = result.stats.messages;
    benchmark::DoNotOptimize(result.stats.rounds);
  }
  state.counters["messages"] = static_cast<double>(messages);
  state.SetItemsProcessed(state.iterations() * messages);
}
BENCHMARK(BM_FloodRounds)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace arbcolor
