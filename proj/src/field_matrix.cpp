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

#include "netprotect/field_matrix.hpp"

#include <utility>

#include "netprotect/error.hpp"

namespace netprotect {

namespace {

void swap_rows(FieldMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(a, c), m(b, c));
}

// Reduces m to row echelon form in place. Returns the pivot column of each
// pivot row; rows beyond the returned size are zero.
std::vector<std::size_t> echelon(FieldMatrix& m, std::size_t pivot_cols, bool* swapped_odd = nullptr)
{
    std::vector<std::size_t> pivots;
    bool odd = false;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t found = row;
        while (found < m.rows() && m(found, col).is_zero())
            ++found;
        if (found == m.rows())
            continue;
        if (found != row) {
            swap_rows(m, found, row);
            odd = !odd;
        }
        const FieldElement inv_pivot = m(row, col).inverse();
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (m(r, col).is_zero())
                continue;
            const FieldElement factor = m(r, col) * inv_pivot;
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    if (swapped_odd)
        *swapped_odd = odd;
    return pivots;
}

} // namespace

FieldMatrix FieldMatrix::submatrix(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const
{
    FieldMatrix sub(field_, row_ids.size(), col_ids.size());
    for (std::size_t r = 0; r < row_ids.size(); ++r)
        for (std::size_t c = 0; c < col_ids.size(); ++c)
            sub(r, c) = (*this)(row_ids[r], col_ids[c]);
    return sub;
}

FieldElement determinant(FieldMatrix matrix)
{
    if (matrix.rows() != matrix.cols())
        throw Error(ErrorKind::LengthMismatch, "determinant requires a square matrix");
    bool odd = false;
    const auto pivots = echelon(matrix, matrix.cols(), &odd);
    if (pivots.size() < matrix.rows())
        return matrix.field().zero();
    FieldElement det = matrix.field().one();
    for (std::size_t i = 0; i < matrix.rows(); ++i)
        det *= matrix(i, i);
    return odd ? -det : det;
}

std::size_t rank(FieldMatrix matrix)
{
    return echelon(matrix, matrix.cols()).size();
}

std::vector<FieldElement> solve(const FieldMatrix& a, std::span<const FieldElement> b)
{
    if (b.size() != a.rows())
        throw Error(ErrorKind::LengthMismatch, "right-hand side length does not match equation count");
    const std::size_t unknowns = a.cols();
    if (a.rows() < unknowns)
        throw Error(ErrorKind::InsufficientEquations, "fewer equations than unknowns");

    FieldMatrix aug(a.field(), a.rows(), unknowns + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < unknowns; ++c)
            aug(r, c) = a(r, c);
        if (b[r].field() != a.field())
            throw Error(ErrorKind::FieldMismatch, "right-hand side belongs to a different field");
        aug(r, unknowns) = b[r];
    }

    const auto pivots = echelon(aug, unknowns);
    if (pivots.size() < unknowns)
        throw Error(ErrorKind::SingularSystem, "coefficient submatrix is singular");
    for (std::size_t r = unknowns; r < aug.rows(); ++r)
        if (!aug(r, unknowns).is_zero())
            throw Error(ErrorKind::InconsistentSymbols, "surplus equations contradict the solution");

    // Back substitution on the upper-triangular block.
    std::vector<FieldElement> x(unknowns, a.field().zero());
    for (std::size_t i = unknowns; i-- > 0;) {
        FieldElement acc = aug(i, unknowns);
        for (std::size_t c = i + 1; c < unknowns; ++c)
            acc -= aug(i, c) * x[c];
        x[i] = acc / aug(i, i);
    }
    return x;
}

} // namespace netprotect
