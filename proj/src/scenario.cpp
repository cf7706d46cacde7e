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

#include "netprotect/scenario.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "netprotect/error.hpp"

namespace netprotect {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& message)
{
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message);
}

std::string_view strip(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class Int>
Int parse_int(std::string_view token, std::size_t line, std::string_view what)
{
    Int value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
        fail(line, "invalid " + std::string(what) + " '" + std::string(token) + "'");
    return value;
}

std::vector<int> parse_id_list(std::string_view token, std::size_t line, std::string_view what)
{
    std::vector<int> values;
    while (true) {
        const auto comma = token.find(',');
        values.push_back(parse_int<int>(strip(token.substr(0, comma)), line, what));
        if (comma == std::string_view::npos)
            break;
        token.remove_prefix(comma + 1);
    }
    return values;
}

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t')
            ++i;
        if (i > start)
            tokens.push_back(s.substr(start, i - start));
    }
    return tokens;
}

const std::map<std::string, std::set<std::string>, std::less<>> kKeys = {
    {"code", {"n", "t", "q"}},
    {"plan", {"kind", "quotas", "rounds"}},
    {"failures", {"mode", "seed", "max_per_round"}},
    {"run", {"cycles", "seed"}},
};

std::string join(const std::vector<int>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

} // namespace

Scenario parse_scenario(std::string_view text)
{
    Scenario scenario;
    std::string section;
    std::set<std::string> seen_sections;
    std::set<std::string> seen_keys;
    std::map<std::string, std::size_t> key_lines;
    std::vector<std::size_t> event_lines;

    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        const std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        const std::string_view line = strip(raw);
        if (line.empty() || line.front() == '#')
            continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                fail(line_no, "malformed section header");
            section = std::string(strip(line.substr(1, line.size() - 2)));
            if (!kKeys.contains(section))
                fail(line_no, "unknown section [" + section + "]");
            if (!seen_sections.insert(section).second)
                fail(line_no, "duplicate section [" + section + "]");
            continue;
        }
        if (section.empty())
            fail(line_no, "content before the first section");

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            if (section != "failures")
                fail(line_no, "expected 'key = value'");
            const auto tokens = split_ws(line);
            if (tokens.size() != 3)
                fail(line_no, "failure event must be '<cycle> <round> <id>,<id>,...'");
            scenario.failures.events.push_back({parse_int<int>(tokens[0], line_no, "cycle"),
                                                parse_int<int>(tokens[1], line_no, "round"),
                                                parse_id_list(tokens[2], line_no, "connection id")});
            event_lines.push_back(line_no);
            continue;
        }

        const std::string key(strip(line.substr(0, eq)));
        const std::string_view value = strip(line.substr(eq + 1));
        if (!kKeys.at(section).contains(key))
            fail(line_no, "unknown key '" + key + "' in [" + section + "]");
        const std::string qualified = section + "." + key;
        if (!seen_keys.insert(qualified).second)
            fail(line_no, "duplicate key '" + key + "' in [" + section + "]");
        key_lines[qualified] = line_no;

        if (qualified == "code.n")
            scenario.connections = parse_int<int>(value, line_no, "n");
        else if (qualified == "code.t")
            scenario.protection_count = parse_int<int>(value, line_no, "t");
        else if (qualified == "code.q")
            scenario.order = parse_int<std::uint64_t>(value, line_no, "q");
        else if (qualified == "plan.kind") {
            if (value == "nps-t")
                scenario.plan_kind = PlanKind::NpsT;
            else if (value == "nps-t2")
                scenario.plan_kind = PlanKind::NpsT2;
            else
                fail(line_no, "plan kind must be nps-t or nps-t2, got '" + std::string(value) + "'");
        } else if (qualified == "plan.quotas")
            scenario.quotas = parse_id_list(value, line_no, "quota");
        else if (qualified == "plan.rounds")
            scenario.rounds = parse_int<int>(value, line_no, "rounds");
        else if (qualified == "failures.mode") {
            if (value == "scripted")
                scenario.failures.mode = FailureMode::Scripted;
            else if (value == "random")
                scenario.failures.mode = FailureMode::Random;
            else
                fail(line_no, "failure mode must be scripted or random, got '" + std::string(value) + "'");
        } else if (qualified == "failures.seed")
            scenario.failures.seed = parse_int<std::uint64_t>(value, line_no, "seed");
        else if (qualified == "failures.max_per_round")
            scenario.failures.max_per_round = parse_int<int>(value, line_no, "max_per_round");
        else if (qualified == "run.cycles")
            scenario.cycles = parse_int<int>(value, line_no, "cycles");
        else if (qualified == "run.seed")
            scenario.seed = parse_int<std::uint64_t>(value, line_no, "seed");
    }

    if (!seen_keys.contains("code.n"))
        fail(line_no, "missing required key 'n' in [code]");
    if (!seen_keys.contains("code.t"))
        fail(line_no, "missing required key 't' in [code]");

    const bool nps_t2 = scenario.plan_kind == PlanKind::NpsT2;
    if (!nps_t2 && seen_keys.contains("plan.quotas"))
        fail(key_lines["plan.quotas"], "quotas apply only to kind = nps-t2");
    if (!nps_t2 && seen_keys.contains("plan.rounds"))
        fail(key_lines["plan.rounds"], "rounds apply only to kind = nps-t2");
    if (nps_t2 && !scenario.quotas)
        fail(line_no, "kind = nps-t2 requires quotas");
    if (scenario.quotas && static_cast<int>(scenario.quotas->size()) != scenario.connections)
        fail(key_lines["plan.quotas"], "expected " + std::to_string(scenario.connections) + " quotas, got " +
                                           std::to_string(scenario.quotas->size()));

    const bool random = scenario.failures.mode == FailureMode::Random;
    if (random && !event_lines.empty())
        fail(event_lines.front(), "event lines are not allowed with mode = random");
    if (!random && seen_keys.contains("failures.seed"))
        fail(key_lines["failures.seed"], "seed applies only to mode = random");
    if (!random && seen_keys.contains("failures.max_per_round"))
        fail(key_lines["failures.max_per_round"], "max_per_round applies only to mode = random");

    for (std::size_t e = 0; e < scenario.failures.events.size(); ++e)
        for (int id : scenario.failures.events[e].ids)
            if (id < 1 || id > scenario.connections)
                fail(event_lines[e], "connection id " + std::to_string(id) + " outside [1, " +
                                         std::to_string(scenario.connections) + "]");
    return scenario;
}

Scenario load_scenario(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::InvalidScenario, "cannot read scenario file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

std::string format_scenario(const Scenario& scenario)
{
    std::ostringstream os;
    os << "[code]\n";
    os << "n = " << scenario.connections << "\n";
    os << "t = " << scenario.protection_count << "\n";
    if (scenario.order)
        os << "q = " << *scenario.order << "\n";

    os << "\n[plan]\n";
    os << "kind = " << to_string(scenario.plan_kind) << "\n";
    if (scenario.quotas)
        os << "quotas = " << join(*scenario.quotas) << "\n";
    if (scenario.rounds)
        os << "rounds = " << *scenario.rounds << "\n";

    os << "\n[failures]\n";
    if (scenario.failures.mode == FailureMode::Random) {
        os << "mode = random\n";
        os << "seed = " << scenario.failures.seed << "\n";
        os << "max_per_round = " << scenario.failures.max_per_round << "\n";
    } else {
        os << "mode = scripted\n";
        for (const auto& event : scenario.failures.events)
            os << event.cycle << " " << event.round << " " << join(event.ids) << "\n";
    }

    os << "\n[run]\n";
    os << "cycles = " << scenario.cycles << "\n";
    os << "seed = " << scenario.seed << "\n";
    return os.str();
}

} // namespace netprotect
