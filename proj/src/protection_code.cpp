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

#include "netprotect/protection_code.hpp"

#include <string>

#include "netprotect/combinatorics.hpp"
#include "netprotect/error.hpp"

namespace netprotect {

namespace {

void validate_counts(int connections, int failures)
{
    if (connections < 2)
        throw Error(ErrorKind::InvalidArgument, "need at least 2 connections, got " + std::to_string(connections));
    if (failures < 1)
        throw Error(ErrorKind::InvalidArgument, "need at least 1 protection path, got " + std::to_string(failures));
    if (failures > connections / 2)
        throw Error(ErrorKind::TooManyFailures,
                    "t=" + std::to_string(failures) + " exceeds floor(n/2)=" + std::to_string(connections / 2) +
                        " for n=" + std::to_string(connections) + " (t <= floor(n/2) is required)");
}

bool consecutive(std::span<const std::size_t> ids)
{
    for (std::size_t i = 1; i < ids.size(); ++i)
        if (ids[i] != ids[i - 1] + 1)
            return false;
    return true;
}

} // namespace

std::uint64_t min_field_order(int connections, int failures)
{
    validate_counts(connections, failures);
    if (failures == 1)
        return 2;
    return next_prime_power(static_cast<std::uint64_t>(connections - failures + 1));
}

ProtectionCode ProtectionCode::build(int connections, int failures, std::uint64_t order)
{
    const std::uint64_t minimum = min_field_order(connections, failures);
    if (order < minimum)
        throw Error(ErrorKind::FieldTooSmall, "q=" + std::to_string(order) + " is below the minimum field order " +
                                                  std::to_string(minimum) + " for n=" + std::to_string(connections) +
                                                  ", t=" + std::to_string(failures));
    const Field field = Field::make(order);
    const FieldElement alpha = field.primitive_element();
    const std::int64_t group = field.order() - 1;

    FieldMatrix h(field, static_cast<std::size_t>(failures), static_cast<std::size_t>(connections));
    for (int k = 0; k < failures; ++k)
        for (int i = 0; i < connections; ++i)
            h(k, i) = alpha.pow((std::int64_t{k} * i) % group);
    return ProtectionCode(connections, failures, alpha, std::move(h));
}

ProtectionCode ProtectionCode::build(int connections, int failures)
{
    return build(connections, failures, min_field_order(connections, failures));
}

std::vector<FieldElement> ProtectionCode::encode_round(std::span<const FieldElement> working) const
{
    if (working.size() != static_cast<std::size_t>(working_count()))
        throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(working_count()) +
                                                   " working symbols, got " + std::to_string(working.size()));
    std::vector<FieldElement> protection(static_cast<std::size_t>(failures_), field().zero());
    for (std::size_t j = 0; j < protection.size(); ++j)
        for (std::size_t w = 0; w < working.size(); ++w)
            protection[j] += coefficients_(j, w) * working[w];
    return protection;
}

SymbolVector ProtectionCode::decode_round(std::span<const std::optional<FieldElement>> working,
                                          std::span<const std::optional<FieldElement>> protection) const
{
    if (working.size() != static_cast<std::size_t>(working_count()))
        throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(working_count()) +
                                                   " working slots, got " + std::to_string(working.size()));
    if (protection.size() != static_cast<std::size_t>(failures_))
        throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(failures_) +
                                                   " protection slots, got " + std::to_string(protection.size()));

    std::vector<std::size_t> lost;
    for (std::size_t w = 0; w < working.size(); ++w)
        if (!working[w])
            lost.push_back(w);
    std::vector<std::size_t> equations;
    for (std::size_t j = 0; j < protection.size(); ++j)
        if (protection[j])
            equations.push_back(j);

    if (lost.size() > equations.size())
        throw Error(ErrorKind::InsufficientEquations, std::to_string(lost.size()) + " working symbols lost but only " +
                                                          std::to_string(equations.size()) +
                                                          " protection equations survived");

    SymbolVector result;
    result.reserve(working.size());
    for (const auto& symbol : working)
        result.push_back(symbol.value_or(field().zero()));
    if (equations.empty())
        return result;

    // Move the known working symbols to the right-hand side.
    FieldMatrix system(field(), equations.size(), lost.size());
    std::vector<FieldElement> rhs;
    rhs.reserve(equations.size());
    for (std::size_t e = 0; e < equations.size(); ++e) {
        const std::size_t row = equations[e];
        FieldElement value = *protection[row];
        for (std::size_t w = 0; w < working.size(); ++w)
            if (working[w])
                value -= coefficients_(row, w) * *working[w];
        rhs.push_back(value);
        for (std::size_t u = 0; u < lost.size(); ++u)
            system(e, u) = coefficients_(row, lost[u]);
    }

    const auto unknowns = solve(system, rhs);
    for (std::size_t u = 0; u < lost.size(); ++u)
        result[lost[u]] = unknowns[u];
    return result;
}

FieldMatrix vandermonde_matrix(std::span<const FieldElement> nodes, unsigned first_power)
{
    if (nodes.empty())
        throw Error(ErrorKind::InvalidArgument, "Vandermonde matrix needs at least one node");
    const Field field = nodes.front().field();
    FieldMatrix m(field, nodes.size(), nodes.size());
    for (std::size_t c = 0; c < nodes.size(); ++c) {
        if (nodes[c].field() != field)
            throw Error(ErrorKind::FieldMismatch, "Vandermonde nodes belong to different fields");
        FieldElement power = nodes[c].pow(first_power);
        for (std::size_t r = 0; r < nodes.size(); ++r) {
            m(r, c) = power;
            power *= nodes[c];
        }
    }
    return m;
}

FieldElement vandermonde_det(std::span<const FieldElement> nodes, unsigned first_power)
{
    if (nodes.empty())
        throw Error(ErrorKind::InvalidArgument, "Vandermonde determinant needs at least one node");
    FieldElement det = nodes.front().field().one();
    for (const auto& node : nodes)
        det *= node.pow(first_power);
    for (std::size_t h = 0; h < nodes.size(); ++h)
        for (std::size_t l = 0; l < h; ++l)
            det *= nodes[h] - nodes[l];
    return det;
}

std::uint64_t certify_workload(int connections, int failures) noexcept
{
    if (failures < 1 || connections < 2 * failures)
        return 0;
    const auto working = static_cast<std::uint64_t>(connections - failures);
    const auto rows = static_cast<std::uint64_t>(failures);
    std::uint64_t total = binomial(working, rows);
    for (std::uint64_t s = 1; s <= rows; ++s) {
        const std::uint64_t a = binomial(rows, s);
        const std::uint64_t b = binomial(working, s);
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        if (b != 0 && a > (max - total) / b)
            return max;
        total += a * b;
    }
    return total;
}

CodeCertificate certify(const ProtectionCode& code, CertifyOptions options)
{
    const int n = code.connection_count();
    const int t = code.protection_count();
    const std::uint64_t workload = certify_workload(n, t);
    if (workload > options.max_subsets)
        throw Error(ErrorKind::InstanceTooLarge, "certification of n=" + std::to_string(n) + ", t=" + std::to_string(t) +
                                                     " needs " + std::to_string(workload) +
                                                     " determinants, budget is " + std::to_string(options.max_subsets));

    CodeCertificate cert;
    cert.connections = n;
    cert.failures = t;
    cert.order = code.field().order();

    const auto working = static_cast<std::size_t>(code.working_count());
    const auto equations = static_cast<std::size_t>(t);
    const FieldMatrix& h = code.coefficients();

    // Entry (k, c) of H is (alpha^c)^k, so a submatrix with consecutive rows
    // starting at k0 is vandermonde_matrix(alpha^c..., k0).
    auto check = [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
        const FieldElement det = determinant(h.submatrix(rows, cols));
        if (consecutive(rows)) {
            std::vector<FieldElement> nodes;
            nodes.reserve(cols.size());
            for (std::size_t c : cols)
                nodes.push_back(code.alpha().pow(static_cast<std::int64_t>(c)));
            ++cert.closed_form_checks;
            if (vandermonde_det(nodes, static_cast<unsigned>(rows.front())) != det)
                ++cert.closed_form_mismatches;
        }
        return !det.is_zero();
    };

    std::vector<std::size_t> all_rows(equations);
    for (std::size_t k = 0; k < equations; ++k)
        all_rows[k] = k;

    cert.all_t_subsets_ok = true;
    for_each_combination(working, equations, [&](const std::vector<std::size_t>& cols) {
        ++cert.t_subsets_checked;
        if (!check(all_rows, cols))
            cert.all_t_subsets_ok = false;
    });

    for (std::size_t s = 1; s <= equations; ++s) {
        for_each_combination(equations, s, [&](const std::vector<std::size_t>& rows) {
            for_each_combination(working, s, [&](const std::vector<std::size_t>& cols) {
                ++cert.mixed_checked;
                if (!check(rows, cols))
                    cert.counterexamples.push_back({rows, cols});
            });
        });
    }
    cert.mixed_ok = cert.counterexamples.empty();
    return cert;
}

} // namespace netprotect
