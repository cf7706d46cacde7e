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

// Table-free reference arithmetic for tests. Nothing here calls into the
// library's field tables or elimination code.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Poly = std::vector<std::uint32_t>; // constant term first

inline std::uint64_t ipow(std::uint64_t base, std::uint32_t exp)
{
    std::uint64_t r = 1;
    while (exp--)
        r *= base;
    return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p)
{
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return out;
}

// Long division remainder; divisor monic.
inline Poly poly_rem(Poly a, const Poly& m, std::uint32_t p)
{
    const std::size_t d = m.size() - 1;
    for (std::size_t top = a.size(); top-- > d;) {
        const std::uint32_t c = a[top];
        if (c == 0)
            continue;
        for (std::size_t i = 0; i <= d; ++i)
            a[top - d + i] = (a[top - d + i] + p * p - c * m[i]) % p;
    }
    a.resize(d, 0);
    return a;
}

// Monic polynomials of the given degree, enumerated by base-p code.
inline std::vector<Poly> monic(std::uint32_t p, std::uint32_t degree)
{
    std::vector<Poly> out;
    const std::uint64_t count = ipow(p, degree);
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly f(degree + 1);
        std::uint64_t rest = code;
        for (std::uint32_t i = 0; i < degree; ++i) {
            f[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        f[degree] = 1;
        out.push_back(f);
    }
    return out;
}

// Smallest irreducible monic polynomial of degree r, comparing coefficient
// vectors constant term first. Sieve: mark every product of two monic
// polynomials of positive degree as reducible.
inline Poly smallest_irreducible(std::uint32_t p, std::uint32_t r)
{
    if (r == 1)
        return {0, 1};
    std::set<Poly> reducible;
    for (std::uint32_t d = 1; d < r; ++d)
        for (const auto& g : monic(p, d))
            for (const auto& h : monic(p, r - d))
                reducible.insert(poly_mul(g, h, p));
    std::vector<Poly> candidates = monic(p, r);
    std::sort(candidates.begin(), candidates.end()); // lexicographic, c0 first
    for (const auto& f : candidates)
        if (!reducible.contains(f))
            return f;
    return {};
}

struct Field {
    std::uint32_t p;
    std::uint32_t r;
    std::uint32_t q;
    Poly modulus;

    Field(std::uint32_t prime, std::uint32_t degree)
        : p(prime), r(degree), q(static_cast<std::uint32_t>(ipow(prime, degree))),
          modulus(smallest_irreducible(prime, degree))
    {
    }

    Poly unpack(std::uint32_t a) const
    {
        Poly f(r);
        for (std::uint32_t i = 0; i < r; ++i) {
            f[i] = a % p;
            a /= p;
        }
        return f;
    }
    std::uint32_t pack(const Poly& f) const
    {
        std::uint32_t a = 0;
        for (std::size_t i = f.size(); i-- > 0;)
            a = a * p + f[i];
        return a;
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const
    {
        Poly fa = unpack(a), fb = unpack(b);
        for (std::uint32_t i = 0; i < r; ++i)
            fa[i] = (fa[i] + fb[i]) % p;
        return pack(fa);
    }
    std::uint32_t neg(std::uint32_t a) const
    {
        Poly fa = unpack(a);
        for (auto& c : fa)
            c = (p - c) % p;
        return pack(fa);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        if (r == 1)
            return (a * b) % p;
        return pack(poly_rem(poly_mul(unpack(a), unpack(b), p), modulus, p));
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const
    {
        std::uint32_t out = 1;
        for (std::uint64_t i = 0; i < e; ++i)
            out = mul(out, a);
        return out;
    }
    std::uint32_t inv(std::uint32_t a) const
    {
        for (std::uint32_t b = 1; b < q; ++b)
            if (mul(a, b) == 1)
                return b;
        return 0;
    }
    std::uint32_t order_of(std::uint32_t a) const
    {
        std::uint32_t x = a;
        std::uint32_t k = 1;
        while (x != 1) {
            x = mul(x, a);
            ++k;
        }
        return k;
    }
    std::uint32_t primitive() const
    {
        for (std::uint32_t g = 1; g < q; ++g)
            if (order_of(g) == q - 1)
                return g;
        return 0;
    }
};

// Permutation-expansion determinant.
inline std::uint32_t leibniz_det(const Field& f, const std::vector<std::vector<std::uint32_t>>& m)
{
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t det = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inversions += perm[i] > perm[j];
        std::uint32_t term = 1;
        for (std::size_t i = 0; i < n; ++i)
            term = f.mul(term, m[i][perm[i]]);
        det = inversions % 2 ? f.sub(det, term) : f.add(det, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

} // namespace oracle
