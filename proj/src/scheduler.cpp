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

#include "netprotect/scheduler.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "netprotect/error.hpp"

namespace netprotect {

namespace {

void validate_counts(int connections, int protection_count)
{
    if (connections < 2 || protection_count < 1)
        throw Error(ErrorKind::InvalidArgument, "need n >= 2 and t >= 1");
    if (protection_count > connections / 2)
        throw Error(ErrorKind::TooManyFailures, "t=" + std::to_string(protection_count) + " exceeds floor(n/2)=" +
                                                    std::to_string(connections / 2) + " for n=" +
                                                    std::to_string(connections) + " (t <= floor(n/2) is required)");
}

} // namespace

std::string_view to_string(PlanKind kind) noexcept
{
    return kind == PlanKind::NpsT ? "nps-t" : "nps-t2";
}

CapacityQuota CapacityQuota::from_pairs(const std::vector<std::pair<int, int>>& plain_and_protected)
{
    if (plain_and_protected.empty())
        throw Error(ErrorKind::InfeasibleQuota, "empty quota");
    const int rounds = plain_and_protected.front().first + plain_and_protected.front().second;
    std::vector<int> protected_rounds;
    for (const auto& [plain, prot] : plain_and_protected) {
        if (plain < 0 || prot < 0 || plain + prot != rounds)
            throw Error(ErrorKind::InfeasibleQuota, "plain + protected rounds must equal the same m for every connection");
        protected_rounds.push_back(prot);
    }
    return CapacityQuota(rounds, std::move(protected_rounds));
}

RoundPlan::RoundPlan(PlanKind kind, int connections, int protection_count, std::vector<std::vector<int>> protection_sets)
    : kind_(kind), connections_(connections), protection_count_(protection_count),
      protection_sets_(std::move(protection_sets))
{
    if (protection_sets_.empty())
        throw Error(ErrorKind::InvalidArgument, "plan needs at least one round");
    grid_.assign(protection_sets_.size(), std::vector<SlotKind>(static_cast<std::size_t>(connections), SlotKind::Plain));
    for (std::size_t j = 0; j < protection_sets_.size(); ++j) {
        const auto& set = protection_sets_[j];
        if (static_cast<int>(set.size()) != protection_count)
            throw Error(ErrorKind::InvalidArgument, "round " + std::to_string(j + 1) + " protects " +
                                                        std::to_string(set.size()) + " connections, expected " +
                                                        std::to_string(protection_count));
        for (int id : set) {
            if (id < 1 || id > connections)
                throw Error(ErrorKind::InvalidArgument, "connection id " + std::to_string(id) + " out of range");
            auto& cell = grid_[j][static_cast<std::size_t>(id - 1)];
            if (cell == SlotKind::Protected)
                throw Error(ErrorKind::InvalidArgument, "connection " + std::to_string(id) + " protected twice in round " +
                                                            std::to_string(j + 1));
            cell = SlotKind::Protected;
        }
    }
}

SlotKind RoundPlan::slot(int round, int id) const
{
    return grid_.at(static_cast<std::size_t>(round - 1)).at(static_cast<std::size_t>(id - 1));
}

const std::vector<int>& RoundPlan::protection_set(int round) const
{
    return protection_sets_.at(static_cast<std::size_t>(round - 1));
}

std::vector<int> RoundPlan::working_set(int round) const
{
    std::vector<int> ids;
    const auto& row = grid_.at(static_cast<std::size_t>(round - 1));
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] == SlotKind::Plain)
            ids.push_back(static_cast<int>(i + 1));
    return ids;
}

int RoundPlan::protected_count(int id) const
{
    int count = 0;
    for (const auto& row : grid_)
        count += row.at(static_cast<std::size_t>(id - 1)) == SlotKind::Protected;
    return count;
}

RoundPlan nps_t_plan(int connections, int protection_count)
{
    validate_counts(connections, protection_count);
    const int rounds = (connections + protection_count - 1) / protection_count;
    std::vector<std::vector<int>> sets;
    for (int j = 0; j < rounds; ++j) {
        std::vector<int> set;
        for (int id = j * protection_count + 1; id <= std::min((j + 1) * protection_count, connections); ++id)
            set.push_back(id);
        for (int id = 1; static_cast<int>(set.size()) < protection_count; ++id)
            if (std::find(set.begin(), set.end(), id) == set.end())
                set.push_back(id);
        sets.push_back(std::move(set));
    }
    return RoundPlan(PlanKind::NpsT, connections, protection_count, std::move(sets));
}

RoundPlan nps_t2_plan(int connections, int protection_count, const CapacityQuota& quotas)
{
    validate_counts(connections, protection_count);
    if (quotas.connections() != connections)
        throw Error(ErrorKind::InfeasibleQuota, "quota lists " + std::to_string(quotas.connections()) +
                                                    " connections, expected " + std::to_string(connections));
    const int rounds = quotas.rounds();
    if (rounds < 1)
        throw Error(ErrorKind::InfeasibleQuota, "a cycle needs at least one round");
    long total = 0;
    for (int id = 1; id <= connections; ++id) {
        const int p = quotas.protected_rounds(id);
        if (p < 0 || p > rounds)
            throw Error(ErrorKind::InfeasibleQuota, "connection " + std::to_string(id) + " has p=" + std::to_string(p) +
                                                        " outside [0, m=" + std::to_string(rounds) + "]");
        total += p;
    }
    if (total != static_cast<long>(protection_count) * rounds)
        throw Error(ErrorKind::InfeasibleQuota, "sum of p_i is " + std::to_string(total) + ", expected t*m=" +
                                                    std::to_string(static_cast<long>(protection_count) * rounds));

    // With sum(p) = t*r and every p_i <= r for r rounds left, at most t
    // connections can sit at p_i = r, so taking the t largest keeps the
    // remainder feasible.
    std::vector<int> remaining = quotas.protected_counts();
    std::vector<std::vector<int>> sets;
    for (int j = 0; j < rounds; ++j) {
        std::vector<int> order(static_cast<std::size_t>(connections));
        std::iota(order.begin(), order.end(), 1);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return remaining[static_cast<std::size_t>(a - 1)] > remaining[static_cast<std::size_t>(b - 1)];
        });
        std::vector<int> set(order.begin(), order.begin() + protection_count);
        std::sort(set.begin(), set.end());
        for (int id : set)
            --remaining[static_cast<std::size_t>(id - 1)];
        sets.push_back(std::move(set));
    }
    return RoundPlan(PlanKind::NpsT2, connections, protection_count, std::move(sets));
}

Rational plan_capacity(const RoundPlan& plan)
{
    std::uint64_t plain = 0;
    for (int j = 1; j <= plan.rounds(); ++j)
        for (int id = 1; id <= plan.connections(); ++id)
            plain += plan.slot(j, id) == SlotKind::Plain;
    return Rational(plain, static_cast<std::uint64_t>(plan.rounds()) * static_cast<std::uint64_t>(plan.connections()));
}

std::string format_plan(const RoundPlan& plan)
{
    std::ostringstream os;
    os << "plan kind=" << to_string(plan.kind()) << " n=" << plan.connections() << " t=" << plan.protection_count()
       << " rounds=" << plan.rounds() << " capacity=" << plan_capacity(plan) << "\n";
    const int width = static_cast<int>(std::to_string(plan.connections()).size());
    for (int id = 1; id <= plan.connections(); ++id) {
        std::string label = std::to_string(id);
        os << "s" << label << std::string(static_cast<std::size_t>(width) - label.size(), ' ') << " ->";
        for (int j = 1; j <= plan.rounds(); ++j)
            os << ' ' << (plan.slot(j, id) == SlotKind::Plain ? 'x' : 'y');
        os << "\n";
    }
    for (int j = 1; j <= plan.rounds(); ++j) {
        os << "round " << j << " protects";
        const char* sep = " ";
        for (int id : plan.protection_set(j)) {
            os << sep << id;
            sep = ",";
        }
        os << "\n";
    }
    return os.str();
}

} // namespace netprotect
