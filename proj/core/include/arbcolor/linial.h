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

#ifndef ARBCOLOR_LINIAL_H_
#define ARBCOLOR_LINIAL_H_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "arbcolor/hpartition.h"
#include "arbcolor/simulator.h"

namespace arbcolor {

// Delta-cover-free family from low-degree polynomials over F_q: member c is
// the graph {(x, p_c(x)) : x in F_q} of the polynomial whose coefficients are
// the base-q digits of c, embedded into the ground set [0, q^2) as x*q + y.
// Two distinct polynomials of degree <= t agree on at most t points, so any
// delta others cover at most delta*t < q of a member's q elements.
class CoverFreeFamily {
 public:
  CoverFreeFamily(std::int64_t delta, std::int64_t k, std::int64_t q, std::int32_t t);

  std::int64_t k() const { return k_; }
  std::int64_t delta() const { return delta_; }
  std::int64_t q() const { return q_; }
  std::int32_t t() const { return t_; }
  std::int64_t ground() const { return q_ * q_; }

  // p_c(x) mod q.
  std::int64_t evaluate(std::int64_t member, std::int64_t x) const;
  // Element of member's set in row x.
  std::int64_t element(std::int64_t member, std::int64_t x) const {
    return x * q_ + evaluate(member, x);
  }
  // Sorted elements of one member (q of them).
  std::vector<std::int64_t> set(std::int64_t member) const;

 private:
  std::int64_t delta_;
  std::int64_t k_;
  std::int64_t q_;
  std::int32_t t_;
};

bool is_prime(std::int64_t x);

// Minimises the ground size q^2 over polynomial degrees t >= 1, where q is the
// smallest prime with q > delta*t and q^(t+1) >= k. Ties go to smaller t.
CoverFreeFamily build_cover_free_family(std::int64_t delta, std::int64_t k);

class CoverFreenessError : public std::runtime_error {
 public:
  CoverFreenessError(const std::string& what, NodeId node)
      : std::runtime_error(what), node(node) {}
  NodeId node;
};

struct ColorRun {
  std::vector<Color> colors;
  RoundStats stats;
};

// One round: every node broadcasts its color, then picks the smallest element
// of its set not covered by its out-neighbors' sets. `colors` must be a
// proper coloring with values in [0, family.k()).
ColorRun linial_reduce_once(const Graph& g, const Orientation& orientation,
                            std::span<const Color> colors, const CoverFreeFamily& family,
                            const RunOptions& options = {});

// Palette sizes k_0 = start > k_1 > ... of the reduction schedule for
// out-degree bound delta; stops at the first family that does not shrink.
std::vector<std::int64_t> linial_schedule(std::int64_t delta, std::int64_t start);

struct LinialLoopResult {
  std::vector<Color> colors;
  std::vector<std::int64_t> palette_sizes;  // k_0 .. k_final
  std::int64_t iterations = 0;
  RoundStats stats;
};

// Iterated reduction from the id coloring; runs as one simulator program
// taking one round per reduction. delta defaults to the orientation's
// max out-degree when 0.
LinialLoopResult linial_color_loop(const Graph& g, const Orientation& orientation,
                                   std::int64_t delta = 0, const RunOptions& options = {});

}  // namespace arbcolor

#endif  // ARBCOLOR_LINIAL_H_
