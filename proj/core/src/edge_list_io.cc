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

#include "arbcolor/edge_list_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace arbcolor {
namespace {

// Strips comments and splits into integer tokens.
std::vector<long long> tokenize(std::istream& in) {
  std::vector<long long> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw GraphError("edge list line " + std::to_string(line_no) +
                         ": bad token '" + token + "'");
      }
      values.push_back(value);
    }
  }
  return values;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  const auto values = tokenize(in);
  if (values.size() < 2) throw GraphError("edge list: missing 'n m' header");
  const long long n = values[0];
  const long long m = values[1];
  if (n < 0 || m < 0) throw GraphError("edge list: negative header values");
  if ((values.size() - 2) % 2 != 0) throw GraphError("edge list: dangling endpoint");
  const std::size_t pairs = (values.size() - 2) / 2;
  if (pairs != static_cast<std::size_t>(m)) {
    throw GraphError("edge list: header declares " + std::to_string(m) +
                     " edges but " + std::to_string(pairs) + " were listed");
  }
  std::vector<Edge> edges;
  edges.reserve(pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    const long long u = values[2 + 2 * i];
    const long long v = values[3 + 2 * i];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge list: edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ") out of range");
    }
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  return from_edge_list(edges, static_cast<NodeId>(n));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot open " + path + " for writing");
  write_edge_list(out, g);
  if (!out) throw GraphError("write failed: " + path);
}

}  // namespace arbcolor
