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

#include "app.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arbcolor/edge_list_io.h"
#include "arbcolor/verify.h"
#include "experiment.h"

namespace arbcolor::app {

namespace {

// "1,2,5" or "1..10" (inclusive), or a mix: "1..3,9".
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      seeds.push_back(std::stoull(part));
    } else {
      const auto lo = std::stoull(part.substr(0, dots));
      const auto hi = std::stoull(part.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("empty seed range: " + part);
      for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
    }
  }
  return seeds;
}

int default_workers() {
  if (const char* env = std::getenv("ARBCOLOR_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << text;
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file: " + path);
  return Json::parse(f);
}

std::vector<Color> read_coloring(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open coloring file: " + path);
  std::vector<Color> colors;
  std::string tok;
  while (f >> tok) {
    if (tok[0] == '#') {
      std::getline(f, tok);
      continue;
    }
    colors.push_back(std::stoll(tok));
  }
  return colors;
}

struct Flags {
  std::string config;
  std::string graph;
  std::vector<std::string> graphs;
  std::string algo;
  std::vector<std::string> algos;
  double epsilon = 1;
  std::vector<double> epsilons;
  std::string seeds;
  std::int64_t round_limit = 0;
  std::string out;
  int workers = 1;
  double dispatch_threshold = 40;
  std::int64_t alpha = 0;
  std::string finisher;
  double phase_cutoff = 0;
  std::string goal;
  double congest_c = 4;
  std::string coloring;
  std::string emit_coloring;
};

struct Options {
  CLI::Option* graph = nullptr;
  CLI::Option* algo = nullptr;
  CLI::Option* epsilon = nullptr;
  CLI::Option* seeds = nullptr;
  CLI::Option* round_limit = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* workers = nullptr;
  CLI::Option* dispatch_threshold = nullptr;
  CLI::Option* alpha = nullptr;
  CLI::Option* finisher = nullptr;
  CLI::Option* phase_cutoff = nullptr;
  CLI::Option* goal = nullptr;
  CLI::Option* congest_c = nullptr;
};

void add_common(CLI::App* cmd, Flags& f, Options& o, bool sweep) {
  cmd->add_option("--config", f.config, "JSON config file; flags override it");
  if (sweep) {
    o.graph = cmd->add_option("--graph", f.graphs, "graph source (repeatable)");
    o.algo = cmd->add_option("--algo", f.algos, "algorithms")->delimiter(',');
    o.epsilon = cmd->add_option("--epsilon", f.epsilons, "epsilon values")->delimiter(',');
  } else {
    o.graph = cmd->add_option("--graph", f.graph, "generator spec or edge-list path");
    o.algo = cmd->add_option("--algo", f.algo, "algorithm");
    o.epsilon = cmd->add_option("--epsilon", f.epsilon, "epsilon");
  }
  o.seeds = cmd->add_option("--seeds", f.seeds, "seed list, e.g. 1,2,3 or 1..10");
  o.round_limit = cmd->add_option("--round-limit", f.round_limit, "round budget");
  o.out = cmd->add_option("--out", f.out, "output path (default stdout)");
  o.workers = cmd->add_option("--workers", f.workers, "sweep worker threads (env ARBCOLOR_WORKERS)");
  o.dispatch_threshold =
      cmd->add_option("--dispatch-threshold", f.dispatch_threshold, "auto-dispatch constant");
  o.alpha = cmd->add_option("--alpha", f.alpha, "declared arboricity");
  o.finisher = cmd->add_option("--finisher", f.finisher, "high-arb finisher: low-arb or linial");
  o.phase_cutoff = cmd->add_option("--phase-cutoff", f.phase_cutoff, "high-arb phase degree cutoff");
  o.goal = cmd->add_option("--goal", f.goal, "auto-dispatch goal: fast or linear");
  o.congest_c = cmd->add_option("--congest-c", f.congest_c, "CONGEST constant c");
}

ExperimentConfig build_config(const Flags& f, const Options& o, bool sweep) {
  ExperimentConfig c;
  c.workers = default_workers();
  if (!f.config.empty()) apply_json_config(read_json_file(f.config), c);
  if (o.graph->count()) {
    if (sweep) c.grid_graphs = f.graphs;
    else c.graph = f.graph;
  }
  if (o.algo->count()) {
    if (sweep) {
      for (const auto& a : f.algos) parse_algorithm(a);
      c.grid_algorithms = f.algos;
    } else {
      c.algorithm = parse_algorithm(f.algo);
    }
  }
  if (o.epsilon->count()) {
    if (sweep) c.grid_epsilons = f.epsilons;
    else c.epsilon = f.epsilon;
  }
  if (o.seeds->count()) c.seeds = parse_seeds(f.seeds);
  if (o.round_limit->count()) c.round_limit = f.round_limit;
  if (o.out->count()) c.out = f.out;
  if (o.workers->count()) c.workers = f.workers;
  if (o.dispatch_threshold->count()) c.dispatch_threshold = f.dispatch_threshold;
  if (o.alpha->count()) c.alpha = f.alpha;
  if (o.finisher->count()) c.finisher = parse_high_arb_finisher(f.finisher);
  if (o.phase_cutoff->count()) c.phase_cutoff = f.phase_cutoff;
  if (o.goal->count()) {
    if (f.goal == "fast") c.goal = DispatchGoal::kFast;
    else if (f.goal == "linear") c.goal = DispatchGoal::kLinear;
    else throw std::invalid_argument("unknown goal: " + f.goal);
  }
  if (o.congest_c->count()) c.congest_c = f.congest_c;
  if (sweep && c.grid_epsilons.empty() && !o.epsilon->count()) c.grid_epsilons = {c.epsilon};
  return c;
}

int cmd_run(const ExperimentConfig& c, const std::string& emit_coloring, std::ostream& out) {
  if (c.graph.empty()) throw std::invalid_argument("run: --graph is required");
  const auto g = load_graph(c.graph, c.alpha);
  std::vector<RunRecord> runs;
  bool improper = false;
  bool unfinished = false;
  for (std::size_t i = 0; i < c.seeds.size(); ++i) {
    std::vector<Color> colors;
    runs.push_back(run_one(g, c, c.seeds[i], c.algorithm, c.epsilon,
                           i == 0 && !emit_coloring.empty() ? &colors : nullptr));
    improper = improper || !runs.back().proper;
    unfinished = unfinished || !runs.back().completed;
    if (i == 0 && !emit_coloring.empty()) {
      std::ostringstream os;
      for (Color col : colors) os << col << '\n';
      write_output(emit_coloring, os.str(), out);
    }
  }
  write_output(c.out, dump(run_document(c, runs, g)), out);
  if (improper) return kExitImproper;
  if (unfinished) return kExitNonTermination;
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distributed arboricity-based graph coloring experiments", "arbcolor"};
  app.require_subcommand(1);

  std::string gen_spec;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "write a generated graph as an edge list");
  generate->add_option("--graph", gen_spec, "generator spec")->required();
  generate->add_option("--out", gen_out, "output path (default stdout)");

  Flags run_flags;
  Options run_opts;
  auto* run = app.add_subcommand("run", "run one algorithm over a seed list");
  add_common(run, run_flags, run_opts, false);
  run->add_option("--emit-coloring", run_flags.emit_coloring, "write the first seed's colors");

  Flags sweep_flags;
  Options sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "cross-product sweep to CSV");
  add_common(sweep, sweep_flags, sweep_opts, true);

  std::string verify_graph;
  std::string verify_coloring;
  std::string verify_out;
  double verify_c = 4;
  auto* verify = app.add_subcommand("verify", "check a coloring file against a graph");
  verify->add_option("--graph", verify_graph, "generator spec or edge-list path")->required();
  verify->add_option("--coloring", verify_coloring, "one color per line, -1 = uncolored")->required();
  verify->add_option("--out", verify_out, "output path (default stdout)");
  verify->add_option("--congest-c", verify_c, "CONGEST constant c");

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      for (auto* sub : app.get_subcommands()) out << sub->help();
      return kExitOk;
    }
    err << "arbcolor: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*generate) {
      auto g = load_graph(gen_spec, std::nullopt);
      std::ostringstream os;
      write_edge_list(os, g.graph);
      write_output(gen_out, os.str(), out);
      return kExitOk;
    }
    if (*run) {
      return cmd_run(build_config(run_flags, run_opts, false), run_flags.emit_coloring, out);
    }
    if (*sweep) {
      const auto c = build_config(sweep_flags, sweep_opts, true);
      write_output(c.out, run_sweep(c), out);
      return kExitOk;
    }
    if (*verify) {
      auto g = load_graph(verify_graph, std::nullopt);
      ColoringState coloring;
      coloring.colors = read_coloring(verify_coloring);
      if (coloring.colors.size() != static_cast<std::size_t>(g.graph.n())) {
        throw std::invalid_argument("coloring has " + std::to_string(coloring.colors.size()) +
                                    " entries, graph has " + std::to_string(g.graph.n()) + " nodes");
      }
      VerifyConfig vc;
      vc.congest_c = verify_c;
      auto rep = report(g.graph, coloring, RoundStats{}, vc);
      write_output(verify_out, dump(to_json(rep)), out);
      return rep.proper ? kExitOk : kExitImproper;
    }
  } catch (const std::exception& e) {
    err << "arbcolor: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace arbcolor::app
