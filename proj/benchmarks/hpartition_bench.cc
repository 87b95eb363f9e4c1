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

#include "arbcolor/generators.h"
#include "arbcolor/hpartition.h"
#include "arbcolor/linial.h"

namespace arbcolor {
namespace {

void BM_HPartition(benchmark::State& state) {
  const auto n = static_cast<NodeId>(state.range(0));
  const auto alpha = state.range(1);
  const auto g = union_of_random_forests(n, alpha, 1);
  for (auto _ : state) {
    auto hp = compute_h_partition(g, alpha, 1.0);
    benchmark::DoNotOptimize(hp.partition.ell);
  }
  state.SetItemsProcessed(state.iterations() * g.m());
}
BENCHMARK(BM_HPartition)
    ->ArgsProduct({{1 << 12, 1 << 14, 1 << 16}, {4, 32}})
    ->Unit(benchmark::kMillisecond);

void BM_LinialLoop(benchmark::State& state) {
  const auto n = static_cast<NodeId>(state.range(0));
  const auto g = union_of_random_forests(n, 4, 2);
  const auto o = orient_from_partition(g, compute_h_partition(g, 4, 1.0).partition);
  for (auto _ : state) {
    auto r = linial_color_loop(g, o);
    benchmark::DoNotOptimize(r.palette_sizes.back());
  }
}
BENCHMARK(BM_LinialLoop)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

void BM_CoverFreeFamily(benchmark::State& state) {
  for (auto _ : state) {
    auto f = build_cover_free_family(state.range(0), 1 << 16);
    benchmark::DoNotOptimize(f.ground());
  }
}
BENCHMARK(BM_CoverFreeFamily)->Arg(4)->Arg(64)->Arg(192);

}  // namespace
}  // namespace arbcolor
