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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "netprotect/field_matrix.hpp"
#include "netprotect/finite_field.hpp"

namespace netprotect {

// Plain data units of one round, ordered by the rank of their connection
// within the round's working set.
using SymbolVector = std::vector<FieldElement>;

// Smallest field order that guarantees recovery from `failures` losses among
// `connections` paths: 2 for a single failure, otherwise the smallest prime
// power >= connections - failures + 1. Throws TooManyFailures when
// failures > connections / 2.
std::uint64_t min_field_order(int connections, int failures);

// Coefficient matrix H over GF(q): row k, column i holds alpha^(k*i mod (q-1)),
// alpha primitive. Row k is protection equation k; column i is the i-th
// working path of a round (rank within the round, not the connection id).
class ProtectionCode {
public:
    static ProtectionCode build(int connections, int failures, std::uint64_t order);
    static ProtectionCode build(int connections, int failures);

    int connection_count() const noexcept { return connections_; }
    int protection_count() const noexcept { return failures_; }
    int working_count() const noexcept { return connections_ - failures_; }

    const Field& field() const noexcept { return coefficients_.field(); }
    FieldElement alpha() const noexcept { return alpha_; }
    const FieldMatrix& coefficients() const noexcept { return coefficients_; }
    const FieldElement& coefficient(std::size_t equation, std::size_t column) const
    {
        return coefficients_(equation, column);
    }

    // y_j = sum_w H[j][w] * x_w over the round's working symbols.
    std::vector<FieldElement> encode_round(std::span<const FieldElement> working) const;

    // Reconstructs the working symbols of a round. nullopt marks a lost
    // symbol (failed working path) or a lost protection equation. Uses every
    // surviving equation; surplus equations are checked for consistency.
    // Throws InsufficientEquations, SingularSystem or InconsistentSymbols.
    SymbolVector decode_round(std::span<const std::optional<FieldElement>> working,
                              std::span<const std::optional<FieldElement>> protection) const;

private:
    ProtectionCode(int connections, int failures, FieldElement alpha, FieldMatrix coefficients)
        : connections_(connections), failures_(failures), alpha_(alpha), coefficients_(std::move(coefficients)) {}

    int connections_;
    int failures_;
    FieldElement alpha_;
    FieldMatrix coefficients_;
};

// Matrix with entry (r, c) = nodes[c]^(first_power + r).
FieldMatrix vandermonde_matrix(std::span<const FieldElement> nodes, unsigned first_power = 1);

// Closed-form determinant of vandermonde_matrix(nodes, first_power):
// (prod_k nodes[k])^first_power * prod_{h > l} (nodes[h] - nodes[l]).
FieldElement vandermonde_det(std::span<const FieldElement> nodes, unsigned first_power = 1);

struct SingularSubmatrix {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> columns;
};

struct CodeCertificate {
    int connections = 0;
    int failures = 0;
    std::uint64_t order = 0;

    // Every choice of `failures` working columns against all equations.
    bool all_t_subsets_ok = false;
    // Every s x s choice of equations and working columns, s <= failures.
    bool mixed_ok = false;
    std::vector<SingularSubmatrix> counterexamples;

    std::uint64_t t_subsets_checked = 0;
    std::uint64_t mixed_checked = 0;
    // Submatrices whose rows are consecutive powers were also compared
    // against vandermonde_det.
    std::uint64_t closed_form_checks = 0;
    std::uint64_t closed_form_mismatches = 0;
};

struct CertifyOptions {
    std::uint64_t max_subsets = 2'000'000;
};

// Number of submatrices certify() would examine.
std::uint64_t certify_workload(int connections, int failures) noexcept;

// Exhaustive rank check of the submatrices recovery depends on. Throws
// InstanceTooLarge when certify_workload exceeds options.max_subsets.
CodeCertificate certify(const ProtectionCode& code, CertifyOptions options = {});

} // namespace netprotect
