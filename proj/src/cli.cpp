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

#include "netprotect/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <vector>

#include "netprotect/error.hpp"
#include "netprotect/failure_sim.hpp"
#include "netprotect/protection_code.hpp"
#include "netprotect/scenario.hpp"
#include "netprotect/scheduler.hpp"

namespace netprotect {

namespace {

constexpr std::size_t kMaxListedCounterexamples = 50;

std::string join(std::span<const std::size_t> values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

const char* yes_no(bool value) { return value ? "true" : "false"; }

int cmd_simulate(const std::string& scenario_path, const std::string& out_path, std::optional<std::uint64_t> seed,
                 std::ostream& out)
{
    Scenario scenario = load_scenario(scenario_path);
    if (seed)
        scenario.seed = *seed;
    const SimulationReport report = run_simulation(scenario);
    const std::string text = report.to_text();
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file)
            throw Error(ErrorKind::InvalidArgument, "cannot write report to " + out_path);
        file << text;
        out << "summary rounds=" << report.records.size() << " unrecoverable=" << report.unrecoverable
            << " singular_system=" << report.singular << " mismatches=" << report.mismatches << "\n";
    }
    const bool failed = report.unrecoverable > 0 || report.singular > 0 || report.mismatches > 0;
    return failed ? kExitRecoveryFailed : kExitOk;
}

void print_certificate(const CodeCertificate& cert, std::ostream& out)
{
    out << "certificate n=" << cert.connections << " t=" << cert.failures << " q=" << cert.order << "\n";
    out << "t_subsets_checked=" << cert.t_subsets_checked << " all_t_subsets_ok=" << yes_no(cert.all_t_subsets_ok)
        << "\n";
    out << "mixed_checked=" << cert.mixed_checked << " mixed_ok=" << yes_no(cert.mixed_ok)
        << " singular=" << cert.counterexamples.size() << "\n";
    out << "closed_form_checks=" << cert.closed_form_checks << " closed_form_mismatches=" << cert.closed_form_mismatches
        << "\n";
    const std::size_t shown = std::min(cert.counterexamples.size(), kMaxListedCounterexamples);
    for (std::size_t i = 0; i < shown; ++i)
        out << "counterexample rows=" << join(cert.counterexamples[i].rows)
            << " columns=" << join(cert.counterexamples[i].columns) << "\n";
    if (shown < cert.counterexamples.size())
        out << "... " << cert.counterexamples.size() - shown << " more counterexamples\n";
}

int cmd_certify(int n, int t, std::optional<std::uint64_t> q, std::optional<std::uint64_t> sweep_max,
                std::ostream& out)
{
    if (!sweep_max) {
        const ProtectionCode code = q ? ProtectionCode::build(n, t, *q) : ProtectionCode::build(n, t);
        const CodeCertificate cert = certify(code);
        print_certificate(cert, out);
        return cert.all_t_subsets_ok ? kExitOk : kExitRecoveryFailed;
    }

    const std::uint64_t start = q.value_or(min_field_order(n, t));
    bool all_ok = true;
    out << "sweep n=" << n << " t=" << t << " q=" << start << ".." << *sweep_max << "\n";
    for (std::uint64_t order = start; order <= *sweep_max; ++order) {
        if (!is_prime_power(order))
            continue;
        const CodeCertificate cert = certify(ProtectionCode::build(n, t, order));
        all_ok = all_ok && cert.all_t_subsets_ok;
        out << "q=" << order << " all_t_subsets_ok=" << yes_no(cert.all_t_subsets_ok)
            << " mixed_ok=" << yes_no(cert.mixed_ok) << " singular=" << cert.counterexamples.size() << "\n";
    }
    return all_ok ? kExitOk : kExitRecoveryFailed;
}

} // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Network protection codes over finite fields", "netprotect"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    auto* simulate = app.add_subcommand("simulate", "Run a scenario file and print the simulation report");
    simulate->add_option("--scenario", scenario_path, "Scenario file")->required();
    simulate->add_option("--out", out_path, "Write the report here instead of stdout");
    simulate->add_option("--seed", seed, "Override the payload seed of the scenario");

    int n = 0;
    int t = 0;
    std::optional<std::uint64_t> q;
    std::optional<std::uint64_t> sweep_max;
    auto* certify_cmd = app.add_subcommand("certify", "Check submatrix ranks of the protection code");
    certify_cmd->add_option("--n", n, "Number of connections")->required();
    certify_cmd->add_option("--t", t, "Number of protection paths")->required();
    certify_cmd->add_option("--q", q, "Field order (default: minimum)");
    certify_cmd->add_option("--sweep-q", sweep_max, "Certify every prime power from the minimum order up to MAX");

    auto* min_field = app.add_subcommand("min-field", "Print the minimum field order");
    min_field->add_option("--n", n, "Number of connections")->required();
    min_field->add_option("--t", t, "Number of protection paths")->required();

    std::string kind = "nps-t";
    std::vector<int> quotas;
    std::optional<int> rounds;
    auto* plan_cmd = app.add_subcommand("plan", "Print the round plan grid");
    plan_cmd->add_option("--scenario", scenario_path, "Take the plan from a scenario file");
    plan_cmd->add_option("--n", n, "Number of connections");
    plan_cmd->add_option("--t", t, "Number of protection paths");
    plan_cmd->add_option("--kind", kind, "nps-t or nps-t2")->check(CLI::IsMember({"nps-t", "nps-t2"}));
    plan_cmd->add_option("--quotas", quotas, "Protected rounds per connection (nps-t2)")->delimiter(',');
    plan_cmd->add_option("--rounds", rounds, "Rounds per cycle (nps-t2)");

    std::vector<const char*> argv{"netprotect"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (*simulate)
            return cmd_simulate(scenario_path, out_path, seed, out);
        if (*certify_cmd)
            return cmd_certify(n, t, q, sweep_max, out);
        if (*min_field) {
            out << min_field_order(n, t) << "\n";
            return kExitOk;
        }
        if (*plan_cmd) {
            Scenario scenario;
            if (!scenario_path.empty()) {
                scenario = load_scenario(scenario_path);
            } else {
                scenario.connections = n;
                scenario.protection_count = t;
                scenario.plan_kind = kind == "nps-t2" ? PlanKind::NpsT2 : PlanKind::NpsT;
                if (!quotas.empty())
                    scenario.quotas = quotas;
                scenario.rounds = rounds;
            }
            out << format_plan(make_plan(scenario));
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitConfigError;
}

} // namespace netprotect
