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

#include "arbcolor/rng.h"

#include <algorithm>
#include <stdexcept>

namespace arbcolor {
namespace {

template <class Source>
std::uint64_t bounded(Source&& next, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform: bound must be > 0");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace

std::uint64_t Rng::uniform(std::uint64_t bound) {
  return bounded([this] { return next(); }, bound);
}

std::uint64_t RngStream::uniform(std::uint64_t bound) {
  return bounded([this] { return draw(); }, bound);
}

std::vector<std::int64_t> sample_distinct(RngStream& rng, std::int64_t k,
                                          std::int64_t range) {
  if (k < 0 || k > range) {
    throw std::invalid_argument("sample_distinct: need 0 <= k <= range");
  }
  std::vector<std::int64_t> picked;
  picked.reserve(static_cast<std::size_t>(k));
  for (std::int64_t j = range - k; j < range; ++j) {
    const auto t = static_cast<std::int64_t>(
        rng.uniform(static_cast<std::uint64_t>(j + 1)));
    auto it = std::lower_bound(picked.begin(), picked.end(), t);
    if (it != picked.end() && *it == t) {
      picked.insert(std::lower_bound(picked.begin(), picked.end(), j), j);
    } else {
      picked.insert(it, t);
    }
  }
  return picked;
}

}  // namespace arbcolor
