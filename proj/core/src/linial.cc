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

#include <algorithm>
#include <limits>
#include <string>

namespace arbcolor {
namespace {

constexpr std::int64_t kCap = std::numeric_limits<std::int64_t>::max() / 4;

// base^exp, saturating at kCap.
std::int64_t saturating_pow(std::int64_t base, std::int32_t exp) {
  std::int64_t result = 1;
  for (std::int32_t i = 0; i < exp; ++i) {
    if (result > kCap / base) return kCap;
    result *= base;
  }
  return result;
}

std::int64_t next_prime_above(std::int64_t x) {
  std::int64_t p = std::max<std::int64_t>(2, x + 1);
  while (!is_prime(p)) ++p;
  return p;
}

// Digits of `member` in base q, lowest first; t + 1 of them.
void digits(std::int64_t member, std::int64_t q, std::int32_t t, std::vector<std::int64_t>& out) {
  out.resize(static_cast<std::size_t>(t) + 1);
  for (std::int32_t i = 0; i <= t; ++i) {
    out[i] = member % q;
    member /= q;
  }
}

std::int64_t horner(const std::vector<std::int64_t>& coeff, std::int64_t x, std::int64_t q) {
  std::int64_t acc = 0;
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = (acc * x + *it) % q;
  return acc;
}

// Smallest uncovered element, or -1.
std::int64_t pick_uncovered(const CoverFreeFamily& family, Color own,
                            const std::vector<Color>& blockers,
                            std::vector<std::vector<std::int64_t>>& scratch) {
  const std::int64_t q = family.q();
  std::vector<std::int64_t> mine;
  digits(own, q, family.t(), mine);
  scratch.resize(blockers.size());
  for (std::size_t i = 0; i < blockers.size(); ++i) digits(blockers[i], q, family.t(), scratch[i]);
  for (std::int64_t x = 0; x < q; ++x) {
    const std::int64_t y = horner(mine, x, q);
    bool covered = false;
    for (std::size_t i = 0; i < blockers.size() && !covered; ++i) {
      covered = horner(scratch[i], x, q) == y;
    }
    if (!covered) return x * q + y;
  }
  return -1;
}

class LinialProgram {
 public:
  struct State {
    Color color;
  };

  LinialProgram(const Orientation& orientation, std::vector<CoverFreeFamily> families,
                std::span<const Color> initial)
      : orientation_(orientation), families_(std::move(families)), initial_(initial) {}

  State init(NodeView& node) {
    State s{initial_[node.id]};
    if (families_.empty()) {
      node.out.halt(s.color);
      return s;
    }
    send_color(node, s.color, families_.front().k());
    return s;
  }

  void on_round(State& s, NodeView& node, const Inbox& inbox) {
    const auto& family = families_[static_cast<std::size_t>(node.round - 1)];
    blockers_.clear();
    for (const Message& msg : inbox) {
      if (orientation_.points_to(node.id, msg.from)) blockers_.push_back(msg.values[0]);
    }
    if (static_cast<std::int64_t>(blockers_.size()) > family.delta()) {
      throw CoverFreenessError("linial: node " + std::to_string(node.id) + " has " +
                                   std::to_string(blockers_.size()) +
                                   " out-neighbors, family delta is " +
                                   std::to_string(family.delta()),
                               node.id);
    }
    const std::int64_t next = pick_uncovered(family, s.color, blockers_, scratch_);
    if (next < 0) {
      throw CoverFreenessError("linial: node " + std::to_string(node.id) +
                                   " found no uncovered element",
                               node.id);
    }
    s.color = next;
    if (static_cast<std::size_t>(node.round) == families_.size()) {
      node.out.halt(s.color);
    } else {
      send_color(node, s.color, family.ground());
    }
  }

 private:
  static void send_color(NodeView& node, Color c, std::int64_t range) {
    const std::int64_t payload[] = {c};
    node.out.broadcast(payload, payload_bits(1, range));
  }

  const Orientation& orientation_;
  std::vector<CoverFreeFamily> families_;
  std::span<const Color> initial_;
  std::vector<Color> blockers_;
  std::vector<std::vector<std::int64_t>> scratch_;
};

std::vector<Color> collect_colors(const RunResult& r) {
  std::vector<Color> colors(r.outputs.size(), kNoColor);
  for (std::size_t v = 0; v < r.outputs.size(); ++v) {
    if (r.outputs[v]) colors[v] = *r.outputs[v];
  }
  return colors;
}

}  // namespace

bool is_prime(std::int64_t x) {
  if (x < 2) return false;
  for (std::int64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

CoverFreeFamily::CoverFreeFamily(std::int64_t delta, std::int64_t k, std::int64_t q,
                                 std::int32_t t)
    : delta_(delta), k_(k), q_(q), t_(t) {
  if (!is_prime(q)) throw std::invalid_argument("CoverFreeFamily: q must be prime");
  if (q <= delta * t) throw std::invalid_argument("CoverFreeFamily: need q > delta * t");
  if (saturating_pow(q, t + 1) < k) throw std::invalid_argument("CoverFreeFamily: q^(t+1) < k");
}

std::int64_t CoverFreeFamily::evaluate(std::int64_t member, std::int64_t x) const {
  std::vector<std::int64_t> coeff;
  digits(member, q_, t_, coeff);
  return horner(coeff, x, q_);
}

std::vector<std::int64_t> CoverFreeFamily::set(std::int64_t member) const {
  std::vector<std::int64_t> coeff;
  digits(member, q_, t_, coeff);
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(q_));
  for (std::int64_t x = 0; x < q_; ++x) out.push_back(x * q_ + horner(coeff, x, q_));
  return out;
}

CoverFreeFamily build_cover_free_family(std::int64_t delta, std::int64_t k) {
  if (delta < 1 || k < 1) throw std::invalid_argument("build_cover_free_family: need delta, k >= 1");
  std::int64_t best_q = 0;
  std::int32_t best_t = 0;
  for (std::int32_t t = 1;; ++t) {
    const std::int64_t floor_q = delta * t;
    if (best_q != 0 && floor_q >= best_q) break;
    std::int64_t q = next_prime_above(floor_q);
    while (saturating_pow(q, t + 1) < k) q = next_prime_above(q);
    if (best_q == 0 || q < best_q) {
      best_q = q;
      best_t = t;
    }
  }
  return CoverFreeFamily(delta, k, best_q, best_t);
}

ColorRun linial_reduce_once(const Graph& g, const Orientation& orientation,
                            std::span<const Color> colors, const CoverFreeFamily& family,
                            const RunOptions& options) {
  for (NodeId v = 0; v < g.n(); ++v) {
    if (colors[v] < 0 || colors[v] >= family.k()) {
      throw std::invalid_argument("linial_reduce_once: color out of family range at node " +
                                  std::to_string(v));
    }
  }
  LinialProgram program(orientation, {family}, colors);
  auto r = run(g, program, options);
  return {collect_colors(r), std::move(r.stats)};
}

std::vector<std::int64_t> linial_schedule(std::int64_t delta, std::int64_t start) {
  std::vector<std::int64_t> sizes{start};
  while (true) {
    const auto family = build_cover_free_family(std::max<std::int64_t>(delta, 1), sizes.back());
    if (family.ground() >= sizes.back()) break;
    sizes.push_back(family.ground());
  }
  return sizes;
}

LinialLoopResult linial_color_loop(const Graph& g, const Orientation& orientation,
                                   std::int64_t delta, const RunOptions& options) {
  if (delta == 0) delta = orientation.max_out_degree();
  delta = std::max<std::int64_t>(delta, 1);
  LinialLoopResult result;
  result.palette_sizes = linial_schedule(delta, std::max<std::int64_t>(g.n(), 1));
  std::vector<CoverFreeFamily> families;
  for (std::size_t i = 0; i + 1 < result.palette_sizes.size(); ++i) {
    families.push_back(build_cover_free_family(delta, result.palette_sizes[i]));
  }
  std::vector<Color> ids(static_cast<std::size_t>(g.n()));
  for (NodeId v = 0; v < g.n(); ++v) ids[v] = v;
  result.iterations = static_cast<std::int64_t>(families.size());
  LinialProgram program(orientation, std::move(families), ids);
  auto r = run(g, program, options);
  result.colors = collect_colors(r);
  result.stats = std::move(r.stats);
  return result;
}

}  // namespace arbcolor
