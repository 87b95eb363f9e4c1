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

#ifndef ARBCOLOR_RNG_H_
#define ARBCOLOR_RNG_H_

#include <cstdint>
#include <vector>

namespace arbcolor {

// SplitMix64 finalizer. All randomness in the library is derived from it so
// that results are bit-identical across standard libraries.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Combines two 64-bit values into one well-mixed key.
constexpr std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ splitmix64(b + 0x632be59bd9b4e019ULL));
}

// Sequential generator used by the graph generators.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return splitmix64(state_);
  }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// Counter-based per-node random stream: draw number i of the stream keyed by
// (root, key) is a pure function of (root, key, i).
class RngStream {
 public:
  RngStream() = default;
  RngStream(std::uint64_t root, std::uint64_t key)
      : base_(hash_combine(root, key)) {}

  static std::uint64_t value_at(std::uint64_t root, std::uint64_t key,
                                std::uint64_t index) {
    return splitmix64(hash_combine(root, key) ^ splitmix64(index));
  }

  std::uint64_t draw() { return splitmix64(base_ ^ splitmix64(draws_++)); }

  // Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);

  std::uint64_t draws() const { return draws_; }

 private:
  std::uint64_t base_ = 0;
  std::uint64_t draws_ = 0;
};

// k distinct values from [0, range), sorted ascending (Floyd's algorithm).
std::vector<std::int64_t> sample_distinct(RngStream& rng, std::int64_t k,
                                          std::int64_t range);

}  // namespace arbcolor

#endif  // ARBCOLOR_RNG_H_
