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

#include "arbcolor/linial.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "arbcolor/generators.h"
#include "arbcolor/hpartition.h"
#include "test_graphs.h"

namespace arbcolor {
namespace {

// Largest fixpoint / delta^2 of the schedule over delta <= 64 (at delta = 1).
constexpr std::int64_t kLinialFixpointC = 9;

// Exhaustive: no member inside the union of any delta others.
bool exhaustive_cover_free(const CoverFreeFamily& f) {
  const std::int64_t k = f.k();
  std::vector<std::vector<std::int64_t>> sets;
  for (std::int64_t c = 0; c < k; ++c) sets.push_back(f.set(c));
  for (std::int64_t s = 0; s < k; ++s) {
    std::vector<std::int64_t> others;
    for (std::int64_t c = 0; c < k; ++c)
      if (c != s) others.push_back(c);
    const std::int64_t r = std::min<std::int64_t>(f.delta(), static_cast<std::int64_t>(others.size()));
    std::vector<std::int64_t> pick;
    bool ok = true;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (!ok) return;
      if (static_cast<std::int64_t>(pick.size()) == r) {
        bool covered = true;
        for (auto x : sets[s]) {
          bool hit = false;
          for (auto o : pick) hit = hit || std::binary_search(sets[o].begin(), sets[o].end(), x);
          if (!hit) {
            covered = false;
            break;
          }
        }
        if (covered) ok = false;
        return;
      }
      for (std::size_t i = from; i < others.size(); ++i) {
        pick.push_back(others[i]);
        rec(i + 1);
        pick.pop_back();
      }
    };
    rec(0);
    if (!ok) return false;
  }
  return true;
}

TEST(Primes, TrialDivision) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
}

TEST(CoverFree, DeltaOneAntichain) {
  auto f = build_cover_free_family(1, 2);
  auto a = f.set(0), b = f.set(1);
  EXPECT_FALSE(std::includes(a.begin(), a.end(), b.begin(), b.end()));
  EXPECT_FALSE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
}

TEST(CoverFree, SmallestPrimeRule) {
  // q = 3 > 2*1 and 3^2 >= 8.
  auto f = build_cover_free_family(2, 8);
  EXPECT_EQ(f.q(), 3);
  EXPECT_EQ(f.t(), 1);
  EXPECT_EQ(f.ground(), 9);
  EXPECT_TRUE(exhaustive_cover_free(f));
  // The explicit q = 5 family is cover-free as well.
  CoverFreeFamily five(2, 8, 5, 1);
  EXPECT_EQ(five.ground(), 25);
  EXPECT_TRUE(exhaustive_cover_free(five));
}

TEST(CoverFree, MembersHaveQElementsOnePerRow) {
  auto f = build_cover_free_family(3, 40);
  for (std::int64_t c = 0; c < f.k(); ++c) {
    auto s = f.set(c);
    ASSERT_EQ(static_cast<std::int64_t>(s.size()), f.q());
    for (std::int64_t x = 0; x < f.q(); ++x) EXPECT_EQ(s[x] / f.q(), x);
  }
}

TEST(CoverFree, RejectsBadParameters) {
  EXPECT_THROW(CoverFreeFamily(2, 8, 4, 1), std::invalid_argument);   // not prime
  EXPECT_THROW(CoverFreeFamily(3, 8, 3, 1), std::invalid_argument);   // q <= delta t
  EXPECT_THROW(CoverFreeFamily(2, 100, 5, 1), std::invalid_argument); // q^2 < k
}

TEST(CoverFree, ExhaustiveSmall) {
  for (std::int64_t delta = 1; delta <= 4; ++delta) {
    for (std::int64_t k = 1; k <= 16; ++k) {
      EXPECT_TRUE(exhaustive_cover_free(build_cover_free_family(delta, k))) << delta << " " << k;
    }
  }
}

TEST(LinialSchedule, ConvergesToQuadraticFixpoint) {
  for (std::int64_t delta = 1; delta <= 64; ++delta) {
    auto s = linial_schedule(delta, 1'000'000);
    for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LT(s[i], s[i - 1]);
    const auto q = build_cover_free_family(delta, s.back()).q();
    EXPECT_LE(s.back(), q * q);
    EXPECT_LE(s.back(), kLinialFixpointC * delta * delta) << delta;
  }
  auto three = linial_schedule(3, 49);
  EXPECT_EQ(three.back(), 49);
}

TEST(LinialReduce, SingleNodePicksMinElement) {
  auto g = testing::empty_graph(1);
  Orientation o(std::vector<std::vector<NodeId>>(1));
  auto f = build_cover_free_family(2, 8);
  std::vector<Color> c{5};
  auto r = linial_reduce_once(g, o, c, f);
  EXPECT_EQ(r.colors[0], f.set(5).front());
  EXPECT_EQ(r.stats.rounds, 1);
}

TEST(LinialReduce, DirectedPath) {
  auto g = testing::path_graph(3);
  auto o = testing::orientation_from_arcs(3, {{0, 1}, {1, 2}});
  auto f = build_cover_free_family(1, 3);
  std::vector<Color> c{2, 0, 1};
  auto r = linial_reduce_once(g, o, c, f);
  EXPECT_NE(r.colors[0], r.colors[1]);
  EXPECT_NE(r.colors[1], r.colors[2]);
  for (auto x : r.colors) EXPECT_LT(x, f.ground());
  // hand check: node 2 has no out-neighbors and takes its set's minimum
  EXPECT_EQ(r.colors[2], f.set(1).front());
}

TEST(LinialReduce, OrientedClique) {
  auto g = testing::complete_graph(6);
  auto o = orient_from_partition(g, compute_h_partition(g, 3, 1.0).partition);
  auto f = build_cover_free_family(5, 6);
  std::vector<Color> ids{0, 1, 2, 3, 4, 5};
  auto r = linial_reduce_once(g, o, ids, f);
  EXPECT_TRUE(testing::edge_scan_proper(g, r.colors));
  for (auto x : r.colors) EXPECT_LT(x, f.ground());
}

TEST(LinialReduce, OutDegreeAboveDeltaAborts) {
  auto g = testing::complete_graph(4);
  auto o = testing::orientation_from_arcs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto f = build_cover_free_family(1, 4);
  std::vector<Color> ids{0, 1, 2, 3};
  EXPECT_THROW(linial_reduce_once(g, o, ids, f), std::exception);
}

TEST(LinialLoop, TreeHasConstantPalette) {
  for (std::uint64_t s = 0; s < 6; ++s) {
    auto g = random_tree(2000, s);
    auto o = orient_from_partition(g, compute_h_partition(g, 1, 1.0).partition);
    auto r = linial_color_loop(g, o);
    EXPECT_TRUE(testing::edge_scan_proper(g, r.colors));
    EXPECT_LE(o.max_out_degree(), 3);
    EXPECT_LE(r.palette_sizes.back(), 49);  // delta 3 fixpoint 7^2
  }
}

TEST(LinialLoop, IsolatedNodes) {
  auto g = testing::empty_graph(50);
  Orientation o(std::vector<std::vector<NodeId>>(50));
  auto r = linial_color_loop(g, o);
  // Every node takes its set's row-0 element; at most q distinct values.
  const auto q = build_cover_free_family(1, r.palette_sizes[r.palette_sizes.size() - 2]).q();
  EXPECT_LE(testing::distinct_colors(r.colors), q);
}

TEST(LinialLoop, ForestUnion) {
  for (std::uint64_t s = 0; s < 4; ++s) {
    auto g = union_of_random_forests(1000, 4, s);
    auto hp = compute_h_partition(g, 4, 1.0).partition;
    auto o = orient_from_partition(g, hp);
    auto r = linial_color_loop(g, o);
    EXPECT_TRUE(testing::edge_scan_proper(g, r.colors));
    const auto d = o.max_out_degree();
    EXPECT_LE(r.palette_sizes.back(), kLinialFixpointC * d * d);
    for (auto c : r.colors) EXPECT_LT(c, r.palette_sizes.back());
    EXPECT_EQ(r.stats.rounds, r.iterations);
  }
}

}  // namespace
}  // namespace arbcolor
