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
#include <span>
#include <string>
#include <vector>

namespace netprotect {

namespace detail {
struct FieldTables;
}

class FieldElement;

// Handle to an immutable GF(p^r). Fields are interned: make() with the same
// order always yields the same tables, so handles compare by identity.
//
// Elements are packed base-p: index = c_0 + c_1 p + ... + c_{r-1} p^{r-1}
// for the residue polynomial c_0 + c_1 x + ... + c_{r-1} x^{r-1}.
class Field {
public:
    // Builds GF(q) with the lexicographically smallest monic irreducible
    // modulus (coefficients compared constant term first). For r = 1 the
    // modulus is x. Throws NotAPrimePower.
    static Field make(std::uint64_t order);

    std::uint32_t characteristic() const noexcept;
    std::uint32_t degree() const noexcept;
    std::uint32_t order() const noexcept;

    // Coefficients of the modulus, constant term first; length degree()+1,
    // leading coefficient 1.
    std::span<const std::uint32_t> modulus() const noexcept;

    FieldElement zero() const noexcept;
    FieldElement one() const noexcept;
    FieldElement element(std::uint32_t index) const;

    // Smallest-index generator of the multiplicative group.
    FieldElement primitive_element() const noexcept;

    std::vector<FieldElement> elements() const;

    // e.g. "GF(4) = GF(2)[x]/(x^2 + x + 1)"
    std::string describe() const;

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.tables_ == b.tables_; }

private:
    explicit Field(const detail::FieldTables* tables) noexcept : tables_(tables) {}
    friend class FieldElement;

    const detail::FieldTables* tables_;
};

class FieldElement {
public:
    std::uint32_t index() const noexcept { return index_; }
    Field field() const noexcept { return Field(tables_); }
    bool is_zero() const noexcept { return index_ == 0; }

    FieldElement inverse() const;
    // Negative exponents invert first; exponents are reduced mod (q - 1).
    FieldElement pow(std::int64_t exponent) const;

    // Discrete log to the field's primitive element; requires a nonzero element.
    std::uint32_t log() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const noexcept;

    FieldElement& operator+=(const FieldElement& other) { return *this = *this + other; }
    FieldElement& operator-=(const FieldElement& other) { return *this = *this - other; }
    FieldElement& operator*=(const FieldElement& other) { return *this = *this * other; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept
    {
        return a.tables_ == b.tables_ && a.index_ == b.index_;
    }

private:
    FieldElement(const detail::FieldTables* tables, std::uint32_t index) noexcept
        : tables_(tables), index_(index) {}
    friend class Field;

    const detail::FieldTables* tables_;
    std::uint32_t index_;
};

inline FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement inv(const FieldElement& a) { return a.inverse(); }
inline FieldElement pow(const FieldElement& a, std::int64_t exponent) { return a.pow(exponent); }

inline Field make_field(std::uint64_t order) { return Field::make(order); }
inline FieldElement primitive_element(const Field& field) noexcept { return field.primitive_element(); }

bool is_prime(std::uint64_t value) noexcept;
bool is_prime_power(std::uint64_t value) noexcept;
// Smallest prime power >= value (value >= 2).
std::uint64_t next_prime_power(std::uint64_t value);

} // namespace netprotect
