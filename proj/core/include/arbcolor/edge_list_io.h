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

#ifndef ARBCOLOR_EDGE_LIST_IO_H_
#define ARBCOLOR_EDGE_LIST_IO_H_

#include <iosfwd>
#include <string>

#include "arbcolor/graph.h"

namespace arbcolor {

// Edge-list text format: a header line "n m", then one "u v" pair per line.
// Tokens are whitespace separated; '#' starts a comment that runs to the end
// of the line. The header m is checked against the number of pairs read.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Writes the canonical form: header, then edges with u < v in sorted order.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace arbcolor

#endif  // ARBCOLOR_EDGE_LIST_IO_H_
