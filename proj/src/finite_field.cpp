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

#include "netprotect/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "netprotect/error.hpp"

namespace netprotect {

namespace detail {

struct FieldTables {
    std::uint32_t p = 0;
    std::uint32_t r = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::uint32_t primitive = 0;
    // exp has 2(q-1) entries so log(a)+log(b) needs no reduction.
    std::vector<std::uint32_t> exp;
    std::vector<std::uint32_t> log;
};

} // namespace detail

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

using Poly = std::vector<std::uint32_t>;

std::uint32_t smallest_prime_factor(std::uint64_t value)
{
    for (std::uint64_t d = 2; d * d <= value; ++d)
        if (value % d == 0)
            return static_cast<std::uint32_t>(d);
    return static_cast<std::uint32_t>(value);
}

void trim(Poly& poly)
{
    while (!poly.empty() && poly.back() == 0)
        poly.pop_back();
}

// Remainder of num modulo a monic divisor over Z_p.
Poly poly_mod(Poly num, const Poly& divisor, std::uint32_t p)
{
    trim(num);
    const std::size_t dd = divisor.size() - 1;
    while (num.size() > dd) {
        const std::uint32_t lead = num.back();
        const std::size_t shift = num.size() - 1 - dd;
        for (std::size_t i = 0; i <= dd; ++i) {
            const std::uint64_t sub = (std::uint64_t{lead} * divisor[i]) % p;
            num[shift + i] = static_cast<std::uint32_t>((num[shift + i] + p - sub) % p);
        }
        trim(num);
    }
    return num;
}

bool is_irreducible(const Poly& poly, std::uint32_t p)
{
    const std::size_t degree = poly.size() - 1;
    if (degree == 1)
        return true;
    if (poly[0] == 0)
        return false;
    // Trial division by every monic polynomial of degree 1..degree/2.
    for (std::size_t d = 1; d <= degree / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i)
            count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly divisor(d + 1);
            std::uint64_t rest = code;
            for (std::size_t i = 0; i < d; ++i) {
                divisor[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            divisor[d] = 1;
            if (poly_mod(poly, divisor, p).empty())
                return false;
        }
    }
    return true;
}

// Candidates ordered lexicographically with the constant term most significant.
Poly smallest_irreducible(std::uint32_t p, std::uint32_t r)
{
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < r; ++i)
        count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly poly(r + 1);
        std::uint64_t rest = code;
        for (std::uint32_t i = r; i-- > 0;) {
            poly[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        poly[r] = 1;
        if (is_irreducible(poly, p))
            return poly;
    }
    throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

Poly unpack(std::uint32_t index, std::uint32_t p, std::uint32_t r)
{
    Poly poly(r);
    for (std::uint32_t i = 0; i < r; ++i) {
        poly[i] = index % p;
        index /= p;
    }
    return poly;
}

std::uint32_t pack(const Poly& poly, std::uint32_t p)
{
    std::uint32_t index = 0;
    for (std::size_t i = poly.size(); i-- > 0;)
        index = index * p + poly[i];
    return index;
}

// Table-free multiplication, used only while building the tables.
std::uint32_t slow_mul(const detail::FieldTables& f, std::uint32_t a, std::uint32_t b)
{
    if (f.r == 1)
        return static_cast<std::uint32_t>((std::uint64_t{a} * b) % f.p);
    const Poly pa = unpack(a, f.p, f.r);
    const Poly pb = unpack(b, f.p, f.r);
    Poly product(2 * f.r - 1, 0);
    for (std::uint32_t i = 0; i < f.r; ++i)
        for (std::uint32_t j = 0; j < f.r; ++j)
            product[i + j] = static_cast<std::uint32_t>((product[i + j] + std::uint64_t{pa[i]} * pb[j]) % f.p);
    Poly rem = poly_mod(std::move(product), f.modulus, f.p);
    rem.resize(f.r, 0);
    return pack(rem, f.p);
}

std::uint32_t slow_pow(const detail::FieldTables& f, std::uint32_t base, std::uint64_t exponent)
{
    std::uint32_t result = 1;
    while (exponent > 0) {
        if (exponent & 1)
            result = slow_mul(f, result, base);
        base = slow_mul(f, base, base);
        exponent >>= 1;
    }
    return result;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t value)
{
    std::vector<std::uint64_t> primes;
    for (std::uint64_t d = 2; d * d <= value; ++d) {
        if (value % d == 0) {
            primes.push_back(d);
            while (value % d == 0)
                value /= d;
        }
    }
    if (value > 1)
        primes.push_back(value);
    return primes;
}

std::unique_ptr<detail::FieldTables> build_tables(std::uint64_t order)
{
    if (order < 2 || !is_prime_power(order))
        throw Error(ErrorKind::NotAPrimePower, "field order " + std::to_string(order) + " is not a prime power");
    if (order > kMaxOrder)
        throw Error(ErrorKind::InvalidArgument,
                    "field order " + std::to_string(order) + " exceeds supported maximum " + std::to_string(kMaxOrder));

    auto f = std::make_unique<detail::FieldTables>();
    f->p = smallest_prime_factor(order);
    f->q = static_cast<std::uint32_t>(order);
    for (std::uint64_t v = order; v > 1; v /= f->p)
        ++f->r;
    f->modulus = f->r == 1 ? Poly{0, 1} : smallest_irreducible(f->p, f->r);

    const std::uint32_t group = f->q - 1;
    const auto factors = distinct_prime_factors(group);
    for (std::uint32_t g = 1; g < f->q; ++g) {
        bool generator = true;
        for (std::uint64_t prime : factors) {
            if (slow_pow(*f, g, group / prime) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) {
            f->primitive = g;
            break;
        }
    }

    f->exp.resize(2 * std::size_t{group});
    f->log.assign(f->q, 0);
    std::uint32_t power = 1;
    for (std::uint32_t k = 0; k < group; ++k) {
        f->exp[k] = power;
        f->exp[k + group] = power;
        f->log[power] = k;
        power = slow_mul(*f, power, f->primitive);
    }
    return f;
}

std::uint32_t add_index(const detail::FieldTables& f, std::uint32_t a, std::uint32_t b) noexcept
{
    if (f.p == 2)
        return a ^ b;
    if (f.r == 1)
        return (a + b) % f.p;
    std::uint32_t result = 0;
    std::uint32_t scale = 1;
    for (std::uint32_t i = 0; i < f.r; ++i) {
        result += ((a % f.p + b % f.p) % f.p) * scale;
        a /= f.p;
        b /= f.p;
        scale *= f.p;
    }
    return result;
}

std::uint32_t neg_index(const detail::FieldTables& f, std::uint32_t a) noexcept
{
    if (f.p == 2)
        return a;
    std::uint32_t result = 0;
    std::uint32_t scale = 1;
    for (std::uint32_t i = 0; i < f.r; ++i) {
        result += ((f.p - a % f.p) % f.p) * scale;
        a /= f.p;
        scale *= f.p;
    }
    return result;
}

void require_same_field(const detail::FieldTables* a, const detail::FieldTables* b)
{
    if (a != b)
        throw Error(ErrorKind::FieldMismatch, "operands belong to different fields");
}

} // namespace

bool is_prime(std::uint64_t value) noexcept
{
    return value >= 2 && smallest_prime_factor(value) == value;
}

bool is_prime_power(std::uint64_t value) noexcept
{
    if (value < 2)
        return false;
    const std::uint64_t p = smallest_prime_factor(value);
    while (value % p == 0)
        value /= p;
    return value == 1;
}

std::uint64_t next_prime_power(std::uint64_t value)
{
    if (value < 2)
        value = 2;
    while (!is_prime_power(value))
        ++value;
    return value;
}

Field Field::make(std::uint64_t order)
{
    static std::mutex mutex;
    static std::map<std::uint64_t, std::unique_ptr<const detail::FieldTables>> registry;

    std::lock_guard lock(mutex);
    auto it = registry.find(order);
    if (it == registry.end())
        it = registry.emplace(order, build_tables(order)).first;
    return Field(it->second.get());
}

std::uint32_t Field::characteristic() const noexcept { return tables_->p; }
std::uint32_t Field::degree() const noexcept { return tables_->r; }
std::uint32_t Field::order() const noexcept { return tables_->q; }
std::span<const std::uint32_t> Field::modulus() const noexcept { return tables_->modulus; }

FieldElement Field::zero() const noexcept { return FieldElement(tables_, 0); }
FieldElement Field::one() const noexcept { return FieldElement(tables_, 1); }
FieldElement Field::primitive_element() const noexcept { return FieldElement(tables_, tables_->primitive); }

FieldElement Field::element(std::uint32_t index) const
{
    if (index >= tables_->q)
        throw Error(ErrorKind::InvalidArgument,
                    "element index " + std::to_string(index) + " out of range for GF(" + std::to_string(tables_->q) + ")");
    return FieldElement(tables_, index);
}

std::vector<FieldElement> Field::elements() const
{
    std::vector<FieldElement> all;
    all.reserve(tables_->q);
    for (std::uint32_t i = 0; i < tables_->q; ++i)
        all.push_back(FieldElement(tables_, i));
    return all;
}

std::string Field::describe() const
{
    std::ostringstream os;
    os << "GF(" << tables_->q << ")";
    if (tables_->r == 1)
        return os.str();
    os << " = GF(" << tables_->p << ")[x]/(";
    bool first = true;
    for (std::size_t i = tables_->modulus.size(); i-- > 0;) {
        const std::uint32_t c = tables_->modulus[i];
        if (c == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (i == 0 || c != 1)
            os << c;
        if (i >= 1)
            os << "x";
        if (i >= 2)
            os << "^" << i;
    }
    os << ")";
    return os.str();
}

FieldElement operator+(const FieldElement& a, const FieldElement& b)
{
    require_same_field(a.tables_, b.tables_);
    return FieldElement(a.tables_, add_index(*a.tables_, a.index_, b.index_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b)
{
    require_same_field(a.tables_, b.tables_);
    return FieldElement(a.tables_, add_index(*a.tables_, a.index_, neg_index(*a.tables_, b.index_)));
}

FieldElement FieldElement::operator-() const noexcept
{
    return FieldElement(tables_, neg_index(*tables_, index_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b)
{
    require_same_field(a.tables_, b.tables_);
    if (a.index_ == 0 || b.index_ == 0)
        return FieldElement(a.tables_, 0);
    const auto& f = *a.tables_;
    return FieldElement(a.tables_, f.exp[f.log[a.index_] + f.log[b.index_]]);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b)
{
    return a * b.inverse();
}

FieldElement FieldElement::inverse() const
{
    if (index_ == 0)
        throw Error(ErrorKind::DivisionByZero, "zero has no multiplicative inverse");
    const auto& f = *tables_;
    const std::uint32_t group = f.q - 1;
    return FieldElement(tables_, f.exp[(group - f.log[index_]) % group]);
}

FieldElement FieldElement::pow(std::int64_t exponent) const
{
    if (exponent < 0)
        return inverse().pow(-(exponent + 1)) * inverse();
    if (exponent == 0)
        return FieldElement(tables_, 1);
    if (index_ == 0)
        return *this;
    const auto& f = *tables_;
    const std::uint64_t group = f.q - 1;
    const std::uint64_t k = (std::uint64_t{f.log[index_]} * (static_cast<std::uint64_t>(exponent) % group)) % group;
    return FieldElement(tables_, f.exp[k]);
}

std::uint32_t FieldElement::log() const
{
    if (index_ == 0)
        throw Error(ErrorKind::DivisionByZero, "logarithm of zero is undefined");
    return tables_->log[index_];
}

} // namespace netprotect
