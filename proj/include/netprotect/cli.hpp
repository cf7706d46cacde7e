/*
   Copyright 2026 The netprotect Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <ostream>
#include <span>
#include <string>

namespace netprotect {

// Exit codes shared by every verb.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitRecoveryFailed = 2;

// Runs the command line (args excludes the program name). Verbs: simulate,
// certify, min-field, plan.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace netprotect
