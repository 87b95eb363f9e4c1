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

#ifndef ARBCOLOR_SERIALIZE_H_
#define ARBCOLOR_SERIALIZE_H_

#include <nlohmann/json.hpp>

#include "arbcolor/high_arb.h"
#include "arbcolor/hpartition.h"
#include "arbcolor/pipeline_types.h"
#include "arbcolor/simulator.h"
#include "arbcolor/verify.h"

namespace arbcolor {

using Json = nlohmann::ordered_json;

Json to_json(const RoundStats& stats);
Json to_json(const PaletteBlock& block);
Json to_json(const HPartition& partition);
Json to_json(const StageRecord& stage);
// {algorithm, colors_used, rounds, messages, max_payload_bits,
//  stage_breakdown, fallback_events, completed}
Json to_json(const PipelineResult& result);
Json to_json(const VerificationReport& report);
Json to_json(const HighArbAccounting& accounting);

// Canonical text form: 2-space indent and a trailing newline.
std::string dump(const Json& j);

}  // namespace arbcolor

#endif  // ARBCOLOR_SERIALIZE_H_
