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

#ifndef ARBCOLOR_COLORING_H_
#define ARBCOLOR_COLORING_H_

#include <cstdint>
#include <string>
#include <vector>

namespace arbcolor {

using NodeId = std::int32_t;
using Color = std::int64_t;

inline constexpr Color kNoColor = -1;

// A contiguous range of colors [offset, offset + size) handed to one stage of
// a pipeline. Blocks of distinct stages never overlap.
struct PaletteBlock {
  std::string stage;
  Color offset = 0;
  Color size = 0;

  Color end() const { return offset + size; }
  bool contains(Color c) const { return c >= offset && c < end(); }
};

// Per-node optional color. kNoColor marks an uncolored node.
struct ColoringState {
  std::vector<Color> colors;
  std::vector<PaletteBlock> blocks;

  ColoringState() = default;
  explicit ColoringState(std::size_t n) : colors(n, kNoColor) {}

  std::size_t size() const { return colors.size(); }
  bool is_colored(NodeId v) const { return colors[v] != kNoColor; }
  std::int64_t uncolored_count() const;
  bool is_total() const { return uncolored_count() == 0; }
  std::vector<char> uncolored_mask() const;
};

// Hands out consecutive, disjoint palette blocks.
class PaletteAllocator {
 public:
  PaletteBlock allocate(std::string stage, Color size) {
    PaletteBlock block{std::move(stage), next_, size};
    next_ += size;
    return block;
  }
  Color next_offset() const { return next_; }

 private:
  Color next_ = 0;
};

}  // namespace arbcolor

#endif  // ARBCOLOR_COLORING_H_
