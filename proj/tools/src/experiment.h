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

#ifndef ARBCOLOR_TOOLS_EXPERIMENT_H_
#define ARBCOLOR_TOOLS_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arbcolor/graph.h"
#include "arbcolor/pipeline.h"
#include "arbcolor/serialize.h"

namespace arbcolor::app {

struct LoadedGraph {
  Graph graph;
  std::int64_t alpha = 1;
  std::string source;
};

// `source` is a generator spec ("forest-union:n=..,alpha=..") or an
// edge-list path. Edge lists without an explicit alpha use the degeneracy,
// which bounds the arboricity from above.
LoadedGraph load_graph(const std::string& source, std::optional<std::int64_t> alpha);

bool is_generator_spec(const std::string& source);

struct ExperimentConfig {
  std::string graph;
  Algorithm algorithm = Algorithm::kAutoDispatch;
  double epsilon = 1.0;
  std::vector<std::uint64_t> seeds{1};
  std::int64_t round_limit = 1'000'000;
  std::string out;
  int workers = 1;
  double dispatch_threshold = 40.0;
  std::optional<std::int64_t> alpha;
  HighArbFinisher finisher = HighArbFinisher::kLowArb;
  std::optional<double> phase_cutoff;
  DispatchGoal goal = DispatchGoal::kFast;
  double congest_c = 4.0;

  // Sweep grid; each empty list makes the grid empty.
  std::vector<std::string> grid_graphs;
  std::vector<std::string> grid_algorithms;
  std::vector<double> grid_epsilons;
};

// Fills fields present in a JSON config object.
void apply_json_config(const Json& j, ExperimentConfig& config);

struct RunRecord {
  std::uint64_t seed = 0;
  bool proper = true;
  bool completed = true;
  Json json;
};

AlgorithmConfig algorithm_config(const ExperimentConfig& config, const LoadedGraph& g,
                                 std::uint64_t seed, Algorithm algorithm, double epsilon);

RunRecord run_one(const LoadedGraph& g, const ExperimentConfig& config, std::uint64_t seed,
                  Algorithm algorithm, double epsilon, std::vector<Color>* colors_out = nullptr);

// Result document of `run`.
Json run_document(const ExperimentConfig& config, const std::vector<RunRecord>& runs,
                  const LoadedGraph& g);

std::string sweep_csv_header();

// Rows in grid order graphs x algorithms x epsilons x seeds.
std::string run_sweep(const ExperimentConfig& config);

}  // namespace arbcolor::app

#endif  // ARBCOLOR_TOOLS_EXPERIMENT_H_
