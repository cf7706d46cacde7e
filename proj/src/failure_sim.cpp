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

#include "netprotect/failure_sim.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "netprotect/error.hpp"

namespace netprotect {

namespace {

// Unbiased draw in [0, bound) straight from the engine, so streams do not
// depend on the standard library's distribution implementations.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound)
{
    // 2^64 mod bound; values below it would over-weight the low residues.
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t value = rng();
    while (value < threshold)
        value = rng();
    return value % bound;
}

void invalid(const std::string& message)
{
    throw Error(ErrorKind::InvalidScenario, message);
}

std::string join_ids(std::span<const int> ids)
{
    if (ids.empty())
        return "-";
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(ids[i]);
    }
    return out;
}

std::string_view case_code(FailureCase c) noexcept
{
    switch (c) {
    case FailureCase::None: return "none";
    case FailureCase::Working: return "i";
    case FailureCase::Protection: return "ii";
    case FailureCase::Mixed: return "iii";
    }
    return "?";
}

} // namespace

std::string_view to_string(FailureCase c) noexcept
{
    switch (c) {
    case FailureCase::None: return "none";
    case FailureCase::Working: return "working";
    case FailureCase::Protection: return "protection";
    case FailureCase::Mixed: return "mixed";
    }
    return "?";
}

std::string_view to_string(RecoveryOutcome o) noexcept
{
    switch (o) {
    case RecoveryOutcome::FullRecovery: return "full-recovery";
    case RecoveryOutcome::NoRecoveryNeeded: return "no-recovery-needed";
    case RecoveryOutcome::Unrecoverable: return "unrecoverable";
    case RecoveryOutcome::SingularSystem: return "singular-system";
    }
    return "?";
}

std::vector<Connection> make_connections(int count)
{
    std::vector<Connection> connections;
    for (int id = 1; id <= count; ++id)
        connections.push_back({id, id, id});
    return connections;
}

FailureCase classify_failures(const RoundPlan& plan, int round, std::span<const int> failed)
{
    bool working = false;
    bool protection = false;
    for (int id : failed) {
        if (plan.slot(round, id) == SlotKind::Plain)
            working = true;
        else
            protection = true;
    }
    if (working && protection)
        return FailureCase::Mixed;
    if (working)
        return FailureCase::Working;
    if (protection)
        return FailureCase::Protection;
    return FailureCase::None;
}

RoundPlan make_plan(const Scenario& scenario)
{
    if (scenario.plan_kind == PlanKind::NpsT) {
        if (scenario.quotas || scenario.rounds)
            invalid("quotas and rounds apply only to nps-t2 plans");
        return nps_t_plan(scenario.connections, scenario.protection_count);
    }
    if (!scenario.quotas)
        invalid("nps-t2 plan requires quotas");
    const int t = scenario.protection_count;
    const int rounds = scenario.rounds.value_or(t > 0 ? (scenario.connections + t - 1) / t : 0);
    return nps_t2_plan(scenario.connections, t, CapacityQuota(rounds, *scenario.quotas));
}

std::vector<SymbolVector> generate_payloads(const RoundPlan& plan, const Field& field, std::uint64_t seed, int cycles,
                                            bool all_zero)
{
    std::mt19937_64 rng(seed);
    const auto width = static_cast<std::size_t>(plan.connections() - plan.protection_count());
    std::vector<SymbolVector> payloads;
    payloads.reserve(static_cast<std::size_t>(cycles) * static_cast<std::size_t>(plan.rounds()));
    for (int c = 0; c < cycles; ++c) {
        for (int j = 0; j < plan.rounds(); ++j) {
            SymbolVector symbols;
            symbols.reserve(width);
            for (std::size_t w = 0; w < width; ++w)
                symbols.push_back(all_zero ? field.zero()
                                           : field.element(static_cast<std::uint32_t>(draw_below(rng, field.order()))));
            payloads.push_back(std::move(symbols));
        }
    }
    return payloads;
}

std::vector<std::vector<int>> expand_failures(const FailureScript& script, int connections, int rounds, int cycles)
{
    std::vector<std::vector<int>> failed(static_cast<std::size_t>(rounds) * static_cast<std::size_t>(cycles));

    if (script.mode == FailureMode::Random) {
        if (!script.events.empty())
            invalid("random failure mode does not take scripted events");
        if (script.max_per_round < 0 || script.max_per_round > connections)
            invalid("max_per_round must lie in [0, " + std::to_string(connections) + "]");
        std::mt19937_64 rng(script.seed);
        std::vector<int> ids(static_cast<std::size_t>(connections));
        for (auto& round_failed : failed) {
            const auto size = draw_below(rng, static_cast<std::uint64_t>(script.max_per_round) + 1);
            std::iota(ids.begin(), ids.end(), 1);
            for (std::size_t i = 0; i < size; ++i) {
                const auto pick = i + draw_below(rng, ids.size() - i);
                std::swap(ids[i], ids[pick]);
            }
            round_failed.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(size));
            std::sort(round_failed.begin(), round_failed.end());
        }
        return failed;
    }

    for (const auto& event : script.events) {
        if (event.cycle < 1 || event.cycle > cycles)
            invalid("failure event cycle " + std::to_string(event.cycle) + " outside [1, " + std::to_string(cycles) + "]");
        if (event.round < 1 || event.round > rounds)
            invalid("failure event round " + std::to_string(event.round) + " outside [1, " + std::to_string(rounds) + "]");
        auto& slot = failed[static_cast<std::size_t>(event.cycle - 1) * static_cast<std::size_t>(rounds) +
                            static_cast<std::size_t>(event.round - 1)];
        for (int id : event.ids) {
            if (id < 1 || id > connections)
                invalid("failure event names connection " + std::to_string(id) + " outside [1, " +
                        std::to_string(connections) + "]");
            slot.push_back(id);
        }
        std::sort(slot.begin(), slot.end());
        slot.erase(std::unique(slot.begin(), slot.end()), slot.end());
    }
    return failed;
}

RoundResult run_round(const ProtectionCode& code, const RoundPlan& plan, int round, const SymbolVector& payload,
                      std::span<const int> failed, int cycle)
{
    RoundResult result;
    result.failed.assign(failed.begin(), failed.end());
    std::sort(result.failed.begin(), result.failed.end());
    result.failed.erase(std::unique(result.failed.begin(), result.failed.end()), result.failed.end());
    for (int id : result.failed)
        if (id < 1 || id > plan.connections())
            throw Error(ErrorKind::InvalidArgument, "failed connection " + std::to_string(id) + " out of range");

    const std::vector<int> working = plan.working_set(round);
    const std::vector<int>& protection = plan.protection_set(round);
    const std::vector<FieldElement> encoded = code.encode_round(payload);

    // Senders: plain slots carry their own data, protected slots carry y_k.
    std::vector<Packet> sent;
    for (std::size_t w = 0; w < working.size(); ++w)
        sent.push_back({working[w], payload[w], round, cycle, PacketKind::Plain});
    for (std::size_t k = 0; k < protection.size(); ++k)
        sent.push_back({protection[k], encoded[k], round, cycle, PacketKind::Encoded});
    std::sort(sent.begin(), sent.end(), [](const Packet& a, const Packet& b) { return a.sender_id < b.sender_id; });

    for (const auto& packet : sent)
        if (!std::binary_search(result.failed.begin(), result.failed.end(), packet.sender_id))
            result.delivered.push_back(packet);

    result.failure_case = classify_failures(plan, round, result.failed);

    // Receivers pool what arrived.
    std::vector<std::optional<FieldElement>> got_working(working.size());
    std::vector<std::optional<FieldElement>> got_protection(protection.size());
    for (const auto& packet : result.delivered) {
        if (packet.kind == PacketKind::Plain) {
            const auto it = std::lower_bound(working.begin(), working.end(), packet.sender_id);
            got_working[static_cast<std::size_t>(it - working.begin())] = packet.payload;
        } else {
            const auto it = std::find(protection.begin(), protection.end(), packet.sender_id);
            got_protection[static_cast<std::size_t>(it - protection.begin())] = packet.payload;
        }
    }

    if (result.failure_case == FailureCase::None || result.failure_case == FailureCase::Protection) {
        result.outcome = RecoveryOutcome::NoRecoveryNeeded;
        for (const auto& symbol : got_working)
            result.recovered.push_back(*symbol);
        return result;
    }

    try {
        result.recovered = code.decode_round(got_working, got_protection);
        result.outcome = RecoveryOutcome::FullRecovery;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InsufficientEquations)
            result.outcome = RecoveryOutcome::Unrecoverable;
        else if (e.kind() == ErrorKind::SingularSystem)
            result.outcome = RecoveryOutcome::SingularSystem;
        else
            throw;
    }
    return result;
}

SimulationReport run_simulation(const Scenario& scenario)
{
    if (scenario.cycles < 1)
        invalid("cycles must be at least 1");
    const ProtectionCode code =
        scenario.order ? ProtectionCode::build(scenario.connections, scenario.protection_count, *scenario.order)
                       : ProtectionCode::build(scenario.connections, scenario.protection_count);
    const RoundPlan plan = make_plan(scenario);
    const auto failures = expand_failures(scenario.failures, plan.connections(), plan.rounds(), scenario.cycles);
    const auto payloads = generate_payloads(plan, code.field(), scenario.seed, scenario.cycles);

    SimulationReport report;
    report.connections = scenario.connections;
    report.protection_count = scenario.protection_count;
    report.order = code.field().order();
    report.plan_kind = plan.kind();
    report.rounds = plan.rounds();
    report.cycles = scenario.cycles;
    report.seed = scenario.seed;

    std::uint64_t plain_delivered = 0;
    std::uint64_t plain_held = 0;
    std::uint64_t ok_rounds = 0;
    for (int c = 1; c <= scenario.cycles; ++c) {
        for (int j = 1; j <= plan.rounds(); ++j) {
            const std::size_t slot =
                static_cast<std::size_t>(c - 1) * static_cast<std::size_t>(plan.rounds()) + static_cast<std::size_t>(j - 1);
            const RoundResult r = run_round(code, plan, j, payloads[slot], failures[slot], c);

            const auto delivered = static_cast<std::uint64_t>(
                std::count_if(r.delivered.begin(), r.delivered.end(),
                              [](const Packet& p) { return p.kind == PacketKind::Plain; }));
            plain_delivered += delivered;

            const bool ok =
                r.outcome == RecoveryOutcome::FullRecovery || r.outcome == RecoveryOutcome::NoRecoveryNeeded;
            const bool verified = ok && r.recovered == payloads[slot];
            switch (r.outcome) {
            case RecoveryOutcome::FullRecovery: ++report.full_recovery; break;
            case RecoveryOutcome::NoRecoveryNeeded: ++report.no_recovery_needed; break;
            case RecoveryOutcome::Unrecoverable: ++report.unrecoverable; break;
            case RecoveryOutcome::SingularSystem: ++report.singular; break;
            }
            if (ok && !verified)
                ++report.mismatches;
            if (verified) {
                ++ok_rounds;
                plain_held += payloads[slot].size();
            } else {
                plain_held += delivered;
            }
            report.records.push_back({c, j, r.failed, r.failure_case, r.outcome, verified});
        }
    }

    const std::uint64_t total_rounds = report.records.size();
    const std::uint64_t slots = total_rounds * static_cast<std::uint64_t>(plan.connections());
    report.measured_capacity = Rational(plain_delivered, slots);
    report.effective_capacity = Rational(plain_held, slots);
    report.success_rate = Rational(ok_rounds, total_rounds);
    return report;
}

std::string SimulationReport::to_text() const
{
    std::ostringstream os;
    os << "netprotect-report v1\n";
    os << "config n=" << connections << " t=" << protection_count << " q=" << order << " plan=" << to_string(plan_kind)
       << " rounds=" << rounds << " cycles=" << cycles << " seed=" << seed << "\n";
    for (const auto& r : records) {
        os << "round cycle=" << r.cycle << " round=" << r.round << " case=" << case_code(r.failure_case)
           << " outcome=" << to_string(r.outcome) << " verified=" << (r.verified ? "yes" : "no")
           << " failed=" << join_ids(r.failed) << "\n";
    }
    os << "summary rounds=" << records.size() << " full_recovery=" << full_recovery
       << " no_recovery_needed=" << no_recovery_needed << " unrecoverable=" << unrecoverable
       << " singular_system=" << singular << " mismatches=" << mismatches << "\n";
    os << "capacity measured=" << measured_capacity << " effective=" << effective_capacity
       << " success_rate=" << success_rate << "\n";
    return os.str();
}

} // namespace netprotect
