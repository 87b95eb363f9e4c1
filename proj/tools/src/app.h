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

#ifndef ARBCOLOR_TOOLS_APP_H_
#define ARBCOLOR_TOOLS_APP_H_

#include <ostream>

namespace arbcolor::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitImproper = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNonTermination = 3;
inline constexpr int kExitError = 4;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arbcolor::app

#endif  // ARBCOLOR_TOOLS_APP_H_
