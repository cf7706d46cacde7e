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

#include <filesystem>
#include <string>
#include <string_view>

#include "netprotect/failure_sim.hpp"

namespace netprotect {

// Scenario files are line-oriented:
//
//   [code]      n = <int>, t = <int>, q = <int> (optional)
//   [plan]      kind = nps-t | nps-t2, quotas = p1,p2,... and rounds = <int>
//               (nps-t2 only)
//   [failures]  mode = scripted | random
//               scripted: event lines "<cycle> <round> <id>,<id>,..."
//               random:   seed = <int>, max_per_round = <int>
//   [run]       cycles = <int>, seed = <int>
//
// Blank lines and lines starting with '#' are ignored. Unknown sections or
// keys, duplicates, and ids outside [1, n] are ParseErrors naming the line.
Scenario parse_scenario(std::string_view text);

Scenario load_scenario(const std::filesystem::path& path);

// Canonical text: every section in the order above, keys in the order above,
// "key = value" with single spaces, one blank line between sections.
std::string format_scenario(const Scenario& scenario);

} // namespace netprotect
