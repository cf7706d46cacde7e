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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netprotect/protection_code.hpp"
#include "netprotect/rational.hpp"
#include "netprotect/scheduler.hpp"

namespace netprotect {

// One end-to-end path s_i -> r_i. Relay nodes along the path are not modeled:
// a path either delivers its packet for a round or it does not.
struct Connection {
    int id;
    int source_id;
    int receiver_id;
};

std::vector<Connection> make_connections(int count);

enum class PacketKind { Plain, Encoded };

struct Packet {
    int sender_id;
    FieldElement payload;
    int round;
    int cycle;
    PacketKind kind;
};

enum class FailureCase {
    None,       // no failures
    Working,    // case i: only working paths failed
    Protection, // case ii: only protection paths failed
    Mixed,      // case iii: both
};

enum class RecoveryOutcome { FullRecovery, NoRecoveryNeeded, Unrecoverable, SingularSystem };

std::string_view to_string(FailureCase c) noexcept;
std::string_view to_string(RecoveryOutcome o) noexcept;

FailureCase classify_failures(const RoundPlan& plan, int round, std::span<const int> failed);

struct FailureEvent {
    int cycle;
    int round;
    std::vector<int> ids;

    friend bool operator==(const FailureEvent&, const FailureEvent&) = default;
};

enum class FailureMode { Scripted, Random };

struct FailureScript {
    FailureMode mode = FailureMode::Scripted;
    std::vector<FailureEvent> events;
    // Random mode: each round draws a set size uniformly in [0, max_per_round]
    // and then that many distinct connections uniformly.
    std::uint64_t seed = 0;
    int max_per_round = 0;

    friend bool operator==(const FailureScript&, const FailureScript&) = default;
};

struct Scenario {
    int connections = 0;
    int protection_count = 0;
    std::optional<std::uint64_t> order;
    PlanKind plan_kind = PlanKind::NpsT;
    std::optional<std::vector<int>> quotas;
    // Rounds per cycle for nps-t2; defaults to ceil(n/t).
    std::optional<int> rounds;
    FailureScript failures;
    int cycles = 1;
    std::uint64_t seed = 0;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Builds the round plan a scenario calls for.
RoundPlan make_plan(const Scenario& scenario);

// Plain data units for every round of `cycles` cycles, indexed
// (cycle - 1) * rounds + (round - 1). Reproducible from the seed.
std::vector<SymbolVector> generate_payloads(const RoundPlan& plan, const Field& field, std::uint64_t seed,
                                            int cycles = 1, bool all_zero = false);

// Failed connection ids for every round, same indexing as generate_payloads.
std::vector<std::vector<int>> expand_failures(const FailureScript& script, int connections, int rounds, int cycles);

struct RoundResult {
    std::vector<int> failed;
    FailureCase failure_case = FailureCase::None;
    RecoveryOutcome outcome = RecoveryOutcome::NoRecoveryNeeded;
    std::vector<Packet> delivered;
    // Working symbols as the receivers hold them after recovery; empty when
    // recovery failed.
    SymbolVector recovered;
};

RoundResult run_round(const ProtectionCode& code, const RoundPlan& plan, int round, const SymbolVector& payload,
                      std::span<const int> failed, int cycle = 1);

struct RoundRecord {
    int cycle;
    int round;
    std::vector<int> failed;
    FailureCase failure_case;
    RecoveryOutcome outcome;
    // Receivers hold exactly the generated payload.
    bool verified;
};

struct SimulationReport {
    int connections = 0;
    int protection_count = 0;
    std::uint64_t order = 0;
    PlanKind plan_kind = PlanKind::NpsT;
    int rounds = 0;
    int cycles = 0;
    std::uint64_t seed = 0;
    std::vector<RoundRecord> records;

    std::uint64_t full_recovery = 0;
    std::uint64_t no_recovery_needed = 0;
    std::uint64_t unrecoverable = 0;
    std::uint64_t singular = 0;
    std::uint64_t mismatches = 0;

    // (1/n) sum c_i averaged over rounds, c_i = 1 iff path i delivered
    // plain data that round.
    Rational measured_capacity;
    // Same, but counting plain data recovered from protection equations.
    Rational effective_capacity;
    // Rounds ending with the receivers holding all data, over all rounds.
    Rational success_rate;

    std::string to_text() const;
};

// Validates the whole scenario, then runs every round. Recovery failures are
// recorded, not thrown.
SimulationReport run_simulation(const Scenario& scenario);

} // namespace netprotect
