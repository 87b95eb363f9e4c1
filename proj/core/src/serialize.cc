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

#include "arbcolor/serialize.h"

#include <algorithm>

#include "arbcolor/verify.h"

namespace arbcolor {

Json to_json(const RoundStats& stats) {
  return Json{{"rounds", stats.rounds},
              {"messages", stats.messages},
              {"max_payload_bits", stats.max_payload_bits}};
}

Json to_json(const PaletteBlock& block) {
  return Json{{"stage", block.stage}, {"offset", block.offset}, {"size", block.size}};
}

Json to_json(const HPartition& partition) {
  return Json{{"epsilon", partition.epsilon},
              {"d", partition.d},
              {"ell", partition.ell},
              {"layers", partition.layer}};
}

Json to_json(const StageRecord& stage) {
  Json j{{"stage", stage.stage}};
  j["palette_block"] = stage.palette_block ? to_json(*stage.palette_block) : Json(nullptr);
  j["rounds"] = stage.rounds;
  j["residual_degree"] = stage.residual_degree;
  j["messages"] = stage.messages;
  j["max_payload_bits"] = stage.max_payload_bits;
  j["uncolored_after"] = stage.uncolored_after;
  return j;
}

Json to_json(const PipelineResult& result) {
  Json j;
  j["algorithm"] = result.algorithm;
  j["colors_used"] = count_colors(result.coloring).count;
  j["rounds"] = result.stats.rounds;
  j["messages"] = result.stats.messages;
  j["max_payload_bits"] = result.stats.max_payload_bits;
  Json stages = Json::array();
  for (const auto& s : result.stages) stages.push_back(to_json(s));
  j["stage_breakdown"] = std::move(stages);
  j["fallback_events"] = result.fallback_events;
  j["completed"] = result.completed;
  return j;
}

Json to_json(const VerificationReport& report) {
  Json j;
  j["proper"] = report.proper;
  Json violations = Json::array();
  for (const auto& [u, v] : report.violations) violations.push_back({u, v});
  j["violations"] = std::move(violations);
  Json blocks = Json::array();
  for (const auto& b : report.colors.blocks) {
    Json bj = to_json(b.block);
    bj["used"] = b.used;
    blocks.push_back(std::move(bj));
  }
  j["colors_used"] = {{"count", report.colors.count},
                      {"blocks", std::move(blocks)},
                      {"outside_blocks", report.colors.outside_blocks}};
  j["rounds"] = report.rounds;
  j["messages"] = report.messages;
  j["uncolored"] = report.uncolored;
  if (report.residual) {
    j["residual"] = {{"nodes", report.residual->nodes},
                     {"max_out_degree", report.residual->max_out_degree},
                     {"longest_path", report.residual->longest_path},
                     {"acyclic", report.residual->acyclic}};
  } else {
    j["residual"] = nullptr;
  }
  j["congest"] = {{"max_payload_bits", report.max_payload_bits},
                  {"limit_bits", report.congest_limit_bits},
                  {"within_limit", report.congest_ok}};
  return j;
}

Json to_json(const HighArbAccounting& accounting) {
  Json phases = Json::array();
  for (const auto& p : accounting.phases) {
    phases.push_back({{"i", p.entry.i},
                      {"d_i", p.entry.d_i},
                      {"q_i", p.entry.q_i},
                      {"f_i", p.entry.f_i},
                      {"residual_degree", p.residual_degree},
                      {"fine_threshold", p.fine_threshold}});
  }
  return Json{{"step1_palette", accounting.step1_palette},
              {"step2_d", accounting.step2_d},
              {"step2_palette", accounting.step2_palette},
              {"phases_run", accounting.phases_run},
              {"phases", std::move(phases)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace arbcolor
