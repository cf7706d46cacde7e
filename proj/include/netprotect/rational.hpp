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
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace netprotect {

// Exact non-negative ratio, always stored in lowest terms.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::uint64_t numerator, std::uint64_t denominator)
    {
        if (denominator == 0)
            throw std::invalid_argument("rational with zero denominator");
        const std::uint64_t g = std::gcd(numerator, denominator);
        num_ = numerator / g;
        den_ = denominator / g;
    }

    constexpr std::uint64_t numerator() const noexcept { return num_; }
    constexpr std::uint64_t denominator() const noexcept { return den_; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

} // namespace netprotect
