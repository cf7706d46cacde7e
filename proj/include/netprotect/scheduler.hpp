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

#include <string>
#include <string_view>
#include <vector>

#include "netprotect/rational.hpp"

namespace netprotect {

enum class SlotKind { Plain, Protected };
enum class PlanKind { NpsT, NpsT2 };

std::string_view to_string(PlanKind kind) noexcept;

// Per-connection split of a cycle into plain rounds and protected rounds.
// Connection ids are 1-based; quota(i) refers to connection i.
class CapacityQuota {
public:
    // protected_rounds[i - 1] is p_i; plain rounds are rounds - p_i.
    CapacityQuota(int rounds, std::vector<int> protected_rounds)
        : rounds_(rounds), protected_(std::move(protected_rounds)) {}

    // From explicit (d_i, p_i) pairs. Throws InfeasibleQuota unless every
    // d_i + p_i agrees.
    static CapacityQuota from_pairs(const std::vector<std::pair<int, int>>& plain_and_protected);

    int rounds() const noexcept { return rounds_; }
    int connections() const noexcept { return static_cast<int>(protected_.size()); }
    int protected_rounds(int id) const { return protected_.at(static_cast<std::size_t>(id - 1)); }
    int plain_rounds(int id) const { return rounds_ - protected_rounds(id); }
    const std::vector<int>& protected_counts() const noexcept { return protected_; }

private:
    int rounds_;
    std::vector<int> protected_;
};

// Which connections carry plain data and which carry encoded data in each
// round of a cycle. Rounds and connection ids are 1-based.
class RoundPlan {
public:
    // protection_sets[j] lists, in equation order, the connections carrying
    // encoded data in round j + 1. Throws InvalidArgument if a round does not
    // hold exactly `protection_count` distinct ids in [1, connections].
    RoundPlan(PlanKind kind, int connections, int protection_count, std::vector<std::vector<int>> protection_sets);

    PlanKind kind() const noexcept { return kind_; }
    int connections() const noexcept { return connections_; }
    int protection_count() const noexcept { return protection_count_; }
    int rounds() const noexcept { return static_cast<int>(protection_sets_.size()); }

    SlotKind slot(int round, int id) const;
    const std::vector<int>& protection_set(int round) const;
    // Plain-slot connections of a round, ascending. The position of an id in
    // this list is its column in the protection code.
    std::vector<int> working_set(int round) const;
    int protected_count(int id) const;

    friend bool operator==(const RoundPlan&, const RoundPlan&) = default;

private:
    PlanKind kind_;
    int connections_;
    int protection_count_;
    std::vector<std::vector<int>> protection_sets_;
    std::vector<std::vector<SlotKind>> grid_;
};

// Uniform rotation: m = ceil(n/t) rounds, round j protects connections
// (j-1)t+1 .. jt. When t does not divide n the last round is topped up with
// the lowest ids it does not already protect.
RoundPlan nps_t_plan(int connections, int protection_count);

// Quota-driven schedule: each round protects the t connections with the most
// remaining protected rounds, ties to the lowest id.
RoundPlan nps_t2_plan(int connections, int protection_count, const CapacityQuota& quotas);

// Plain slots over all slots of the cycle.
Rational plan_capacity(const RoundPlan& plan);

// Text grid, one line per connection: 'x' plain, 'y' protected.
std::string format_plan(const RoundPlan& plan);

} // namespace netprotect
