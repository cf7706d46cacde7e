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
#include <limits>
#include <type_traits>
#include <vector>

namespace netprotect {

// Calls fn(const std::vector<std::size_t>&) for every k-subset of [0, n) in
// lexicographic order. Stops early if fn returns false.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn)
{
    if (k > n)
        return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        if constexpr (std::is_same_v<decltype(fn(idx)), bool>) {
            if (!fn(idx))
                return;
        } else {
            fn(idx);
        }
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

// Binomial coefficient, saturating at the maximum uint64 value.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t num = n - k + i;
        if (result > std::numeric_limits<std::uint64_t>::max() / num)
            return std::numeric_limits<std::uint64_t>::max();
        result = result * num / i;
    }
    return result;
}

} // namespace netprotect
