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
#include <span>
#include <vector>

#include "netprotect/finite_field.hpp"

namespace netprotect {

// Dense row-major matrix over a single finite field.
class FieldMatrix {
public:
    FieldMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElement& operator()(std::size_t row, std::size_t col) { return data_[row * cols_ + col]; }
    const FieldElement& operator()(std::size_t row, std::size_t col) const { return data_[row * cols_ + col]; }

    std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    FieldMatrix submatrix(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const;

    friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> data_;
};

// Determinant of a square matrix by Gaussian elimination.
FieldElement determinant(FieldMatrix matrix);

std::size_t rank(FieldMatrix matrix);

// Solves A x = b for A with rows >= cols. Pivots are the first nonzero entry
// in each column. Throws SingularSystem when A lacks full column rank and
// InconsistentSymbols when surplus equations disagree with the solution.
std::vector<FieldElement> solve(const FieldMatrix& a, std::span<const FieldElement> b);

} // namespace netprotect
