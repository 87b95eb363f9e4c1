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

#include "experiment.h"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "arbcolor/edge_list_io.h"
#include "arbcolor/generators.h"
#include "arbcolor/verify.h"

namespace arbcolor::app {

bool is_generator_spec(const std::string& source) {
  const auto colon = source.find(':');
  if (colon == std::string::npos) return false;
  try {
    parse_graph_family(source.substr(0, colon));
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

namespace {

std::int64_t degeneracy(const Graph& g) {
  const auto order = degeneracy_order(g);
  std::vector<std::int64_t> pos(static_cast<std::size_t>(g.n()));
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<std::int64_t>(i);
  std::int64_t best = 0;
  for (NodeId v = 0; v < g.n(); ++v) {
    std::int64_t later = 0;
    for (NodeId u : g.neighbors(v)) later += pos[u] > pos[v] ? 1 : 0;
    best = std::max(best, later);
  }
  return best;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_double(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

LoadedGraph load_graph(const std::string& source, std::optional<std::int64_t> alpha) {
  LoadedGraph out;
  out.source = source;
  if (is_generator_spec(source)) {
    auto gen = generate(parse_gen_spec(source, 1));
    out.graph = std::move(gen.graph);
    out.alpha = alpha.value_or(gen.declared_alpha);
  } else {
    out.graph = read_edge_list_file(source);
    out.alpha = alpha.value_or(std::max<std::int64_t>(1, degeneracy(out.graph)));
  }
  if (out.alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  return out;
}

void apply_json_config(const Json& j, ExperimentConfig& c) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  if (j.contains("graph")) c.graph = j.at("graph").get<std::string>();
  if (j.contains("algo")) c.algorithm = parse_algorithm(j.at("algo").get<std::string>());
  if (j.contains("epsilon")) c.epsilon = j.at("epsilon").get<double>();
  if (j.contains("seeds")) c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  if (j.contains("round_limit")) c.round_limit = j.at("round_limit").get<std::int64_t>();
  if (j.contains("out")) c.out = j.at("out").get<std::string>();
  if (j.contains("workers")) c.workers = j.at("workers").get<int>();
  if (j.contains("dispatch_threshold")) c.dispatch_threshold = j.at("dispatch_threshold").get<double>();
  if (j.contains("alpha")) c.alpha = j.at("alpha").get<std::int64_t>();
  if (j.contains("finisher")) c.finisher = parse_high_arb_finisher(j.at("finisher").get<std::string>());
  if (j.contains("phase_cutoff")) c.phase_cutoff = j.at("phase_cutoff").get<double>();
  if (j.contains("goal")) {
    const auto g = j.at("goal").get<std::string>();
    if (g == "fast") c.goal = DispatchGoal::kFast;
    else if (g == "linear") c.goal = DispatchGoal::kLinear;
    else throw std::invalid_argument("unknown goal: " + g);
  }
  if (j.contains("congest_c")) c.congest_c = j.at("congest_c").get<double>();
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    if (g.contains("graphs")) c.grid_graphs = g.at("graphs").get<std::vector<std::string>>();
    if (g.contains("algos")) {
      c.grid_algorithms = g.at("algos").get<std::vector<std::string>>();
      for (const auto& a : c.grid_algorithms) parse_algorithm(a);
    }
    if (g.contains("epsilons")) c.grid_epsilons = g.at("epsilons").get<std::vector<double>>();
  }
}

AlgorithmConfig algorithm_config(const ExperimentConfig& config, const LoadedGraph& g,
                                 std::uint64_t seed, Algorithm algorithm, double epsilon) {
  AlgorithmConfig a;
  a.algorithm = algorithm;
  a.alpha = g.alpha;
  a.epsilon = epsilon;
  a.seed = seed;
  a.round_limit = config.round_limit;
  a.dispatch_threshold = config.dispatch_threshold;
  a.goal = config.goal;
  a.high_arb.finisher = config.finisher;
  a.high_arb.phase_cutoff = config.phase_cutoff;
  if (algorithm == Algorithm::kHighArb) a.dispatch_threshold = 0;
  return a;
}

RunRecord run_one(const LoadedGraph& g, const ExperimentConfig& config, std::uint64_t seed,
                  Algorithm algorithm, double epsilon, std::vector<Color>* colors_out) {
  RunRecord rec;
  rec.seed = seed;
  rec.json["seed"] = seed;
  rec.json["algorithm"] = to_string(algorithm);
  rec.json["epsilon"] = epsilon;
  try {
    auto run = run_algorithm(g.graph, algorithm_config(config, g, seed, algorithm, epsilon));
    VerifyConfig vc;
    vc.congest_c = config.congest_c;
    if (run.result.residual) {
      vc.residual_orientation = &run.result.residual->orientation;
      vc.residual_uncolored = run.result.residual->uncolored;
    }
    auto report = arbcolor::report(g.graph, run.result.coloring, run.result.stats, vc);
    rec.proper = report.proper;
    rec.completed = run.result.completed && report.uncolored == 0;
    rec.json["result"] = to_json(run.result);
    rec.json["verification"] = to_json(report);
    if (run.high_arb) rec.json["high_arb"] = to_json(*run.high_arb);
    rec.json["error"] = nullptr;
    if (colors_out) *colors_out = run.result.coloring.colors;
  } catch (const std::exception& e) {
    rec.completed = false;
    rec.json["result"] = nullptr;
    rec.json["verification"] = nullptr;
    rec.json["error"] = e.what();
  }
  return rec;
}

Json run_document(const ExperimentConfig& config, const std::vector<RunRecord>& runs,
                  const LoadedGraph& g) {
  Json doc;
  doc["graph"] = {{"source", g.source}, {"n", g.graph.n()}, {"m", g.graph.m()}, {"alpha", g.alpha}};
  doc["config"] = {{"algo", to_string(config.algorithm)},
                   {"epsilon", config.epsilon},
                   {"round_limit", config.round_limit},
                   {"dispatch_threshold", config.dispatch_threshold},
                   {"finisher", to_string(config.finisher)},
                   {"goal", config.goal == DispatchGoal::kFast ? "fast" : "linear"}};
  doc["config"]["phase_cutoff"] = config.phase_cutoff ? Json(*config.phase_cutoff) : Json(nullptr);
  Json arr = Json::array();
  for (const auto& r : runs) arr.push_back(r.json);
  doc["runs"] = std::move(arr);
  return doc;
}

std::string sweep_csv_header() {
  return "graph,n,m,alpha,epsilon,algorithm,seed,colors,rounds,messages,max_payload_bits,"
         "uncolored,residual_nodes,residual_max_out_degree,residual_longest_path,proper,"
         "completed,error\n";
}

std::string run_sweep(const ExperimentConfig& config) {
  struct Task {
    std::size_t graph;
    Algorithm algorithm;
    double epsilon;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (std::size_t gi = 0; gi < config.grid_graphs.size(); ++gi) {
    for (const auto& a : config.grid_algorithms) {
      for (double eps : config.grid_epsilons) {
        for (auto s : config.seeds) tasks.push_back({gi, parse_algorithm(a), eps, s});
      }
    }
  }
  std::string out = sweep_csv_header();
  if (tasks.empty()) return out;

  std::vector<std::optional<LoadedGraph>> graphs(config.grid_graphs.size());
  std::vector<std::string> graph_errors(config.grid_graphs.size());
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    try {
      graphs[gi] = load_graph(config.grid_graphs[gi], config.alpha);
    } catch (const std::exception& e) {
      graph_errors[gi] = e.what();
    }
  }

  std::vector<std::string> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const auto& task = tasks[t];
      std::ostringstream row;
      row << csv_field(config.grid_graphs[task.graph]) << ',';
      if (!graphs[task.graph]) {
        row << ",,," << format_double(task.epsilon) << ',' << to_string(task.algorithm) << ','
            << task.seed << ",,,,,,,,,false,false," << csv_field(graph_errors[task.graph]) << '\n';
        rows[t] = row.str();
        continue;
      }
      const auto& g = *graphs[task.graph];
      auto rec = run_one(g, config, task.seed, task.algorithm, task.epsilon);
      row << g.graph.n() << ',' << g.graph.m() << ',' << g.alpha << ','
          << format_double(task.epsilon) << ',' << to_string(task.algorithm) << ',' << task.seed
          << ',';
      if (rec.json["result"].is_null()) {
        row << ",,,,,,,,false,false," << csv_field(rec.json["error"].get<std::string>()) << '\n';
      } else {
        const auto& r = rec.json["result"];
        const auto& v = rec.json["verification"];
        row << r["colors_used"].get<std::int64_t>() << ',' << r["rounds"].get<std::int64_t>() << ','
            << r["messages"].get<std::int64_t>() << ',' << r["max_payload_bits"].get<std::int64_t>()
            << ',' << v["uncolored"].get<std::int64_t>() << ',';
        if (v["residual"].is_null()) {
          row << ",,,";
        } else {
          const auto& res = v["residual"];
          row << res["nodes"].get<std::int64_t>() << ',' << res["max_out_degree"].get<std::int64_t>()
              << ',' << res["longest_path"].get<std::int64_t>() << ',';
        }
        row << (rec.proper ? "true" : "false") << ',' << (rec.completed ? "true" : "false") << ",\n";
      }
      rows[t] = row.str();
    }
  };
  const int workers = std::max(1, std::min<int>(config.workers, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& r : rows) out += r;
  return out;
}

}  // namespace arbcolor::app
