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

#include <doctest.h>

#include <random>
#include <set>

#include "../oracle.hpp"
#include "netprotect/combinatorics.hpp"
#include "netprotect/error.hpp"
#include "netprotect/protection_code.hpp"

using namespace netprotect;

namespace {

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::InvalidArgument;
}

std::vector<std::uint32_t> indices(std::span<const FieldElement> v)
{
    std::vector<std::uint32_t> out;
    for (const auto& e : v)
        out.push_back(e.index());
    return out;
}

SymbolVector random_symbols(const Field& f, std::size_t count, std::mt19937_64& rng)
{
    SymbolVector v;
    for (std::size_t i = 0; i < count; ++i)
        v.push_back(f.element(static_cast<std::uint32_t>(rng() % f.order())));
    return v;
}

using Slots = std::vector<std::optional<FieldElement>>;

Slots all_present(std::span<const FieldElement> v)
{
    return Slots(v.begin(), v.end());
}

} // namespace

TEST_CASE("min_field_order")
{
    CHECK(min_field_order(4, 1) == 2);
    CHECK(min_field_order(10, 3) == 8);
    CHECK(min_field_order(10, 2) == 9);
    CHECK(min_field_order(6, 2) == 5);
    CHECK(kind_of([] { min_field_order(4, 3); }) == ErrorKind::TooManyFailures);
    CHECK(kind_of([] { min_field_order(5, 3); }) == ErrorKind::TooManyFailures);
    CHECK(kind_of([] { min_field_order(1, 1); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { min_field_order(4, 0); }) == ErrorKind::InvalidArgument);

    // Brute force: the smallest q >= n-t+1 whose factorization has one prime.
    for (int n = 2; n <= 40; ++n) {
        for (int t = 2; t <= n / 2; ++t) {
            std::uint64_t q = static_cast<std::uint64_t>(n - t + 1);
            auto one_prime = [](std::uint64_t v) {
                std::uint64_t p = 0;
                for (std::uint64_t d = 2; d <= v; ++d) {
                    if (v % d)
                        continue;
                    if (p && p != d)
                        return false;
                    p = d;
                    v /= d;
                    d = 1;
                }
                return p != 0;
            };
            while (!one_prime(q))
                ++q;
            CHECK(min_field_order(n, t) == q);
        }
    }
}

TEST_CASE("build_code coefficient matrix")
{
    const ProtectionCode single = ProtectionCode::build(4, 1, 2);
    CHECK(single.coefficients().rows() == 1);
    CHECK(indices(single.coefficients().row(0)) == std::vector<std::uint32_t>{1, 1, 1, 1});

    const ProtectionCode c52 = ProtectionCode::build(5, 2, 5);
    CHECK(c52.alpha().index() == 2);
    CHECK(indices(c52.coefficients().row(0)) == std::vector<std::uint32_t>{1, 1, 1, 1, 1});
    CHECK(indices(c52.coefficients().row(1)) == std::vector<std::uint32_t>{1, 2, 4, 3, 1});

    const ProtectionCode c42 = ProtectionCode::build(4, 2, 4);
    CHECK(c42.working_count() == 2);
    CHECK(c42.coefficient(1, 0) != c42.coefficient(1, 1));

    // t = 1 is all ones in any admissible field.
    CHECK(indices(ProtectionCode::build(6, 1, 7).coefficients().row(0)) ==
          std::vector<std::uint32_t>(6, 1));

    CHECK(kind_of([] { ProtectionCode::build(10, 3, 7); }) == ErrorKind::FieldTooSmall);
    CHECK(kind_of([] { ProtectionCode::build(4, 3, 16); }) == ErrorKind::TooManyFailures);
    CHECK(kind_of([] { ProtectionCode::build(4, 1, 6); }) == ErrorKind::NotAPrimePower);
}

TEST_CASE("coefficient matrix invariants")
{
    for (int n = 2; n <= 12; ++n) {
        for (int t = 1; t <= n / 2; ++t) {
            const ProtectionCode code = ProtectionCode::build(n, t);
            const auto& h = code.coefficients();
            const std::int64_t group = code.field().order() - 1;
            CAPTURE(n);
            CAPTURE(t);
            for (std::size_t i = 0; i < h.cols(); ++i)
                CHECK(h(0, i) == code.field().one());
            for (std::size_t k = 0; k < h.rows(); ++k) {
                for (std::size_t i = 0; i < h.cols(); ++i) {
                    CHECK_FALSE(h(k, i).is_zero());
                    CHECK(h(k, i) == code.alpha().pow((static_cast<std::int64_t>(k * i)) % group));
                }
            }
            // For t >= 2 the working-column nodes are pairwise distinct
            // (t = 1 needs only the all-ones row).
            if (t >= 2) {
                std::set<std::uint32_t> nodes;
                for (int w = 0; w < code.working_count(); ++w)
                    nodes.insert(code.alpha().pow(w).index());
                CHECK(static_cast<int>(nodes.size()) == code.working_count());
            }
        }
    }
}

TEST_CASE("encode_round")
{
    SUBCASE("t = 1 is a plain sum")
    {
        const ProtectionCode code = ProtectionCode::build(5, 1, 2);
        const Field f = code.field();
        const SymbolVector x{f.one(), f.zero(), f.one(), f.one()};
        CHECK(code.encode_round(x) == std::vector<FieldElement>{f.one()});

        const ProtectionCode c7 = ProtectionCode::build(4, 1, 7);
        const Field g = c7.field();
        const SymbolVector z{g.element(3), g.element(5), g.element(6)};
        CHECK(c7.encode_round(z) == std::vector<FieldElement>{g.element(0)});
    }
    SUBCASE("t = 2 over GF(4)")
    {
        const ProtectionCode code = ProtectionCode::build(4, 2, 4);
        const Field f = code.field();
        const FieldElement a = code.alpha();
        const SymbolVector x{f.one(), a};
        const auto y = code.encode_round(x);
        CHECK(y[0] == f.one() + a);
        CHECK(y[1] == f.one() + a * a);
        // Hand table for GF(2)[x]/(x^2+x+1): 1 + x = 3, 1 + x^2 = x = 2.
        CHECK(indices(y) == std::vector<std::uint32_t>{3, 2});
    }
    SUBCASE("zero in, zero out")
    {
        const ProtectionCode code = ProtectionCode::build(10, 3);
        const SymbolVector x(7, code.field().zero());
        CHECK(code.encode_round(x) == std::vector<FieldElement>(3, code.field().zero()));
    }
    SUBCASE("length mismatch")
    {
        const ProtectionCode code = ProtectionCode::build(6, 2);
        const SymbolVector x(3, code.field().zero());
        CHECK(kind_of([&] { code.encode_round(x); }) == ErrorKind::LengthMismatch);
    }
}

TEST_CASE("decode_round examples")
{
    std::mt19937_64 rng(5);

    SUBCASE("nothing lost returns the working symbols")
    {
        const ProtectionCode code = ProtectionCode::build(6, 2);
        const SymbolVector x = random_symbols(code.field(), 4, rng);
        const auto y = code.encode_round(x);
        CHECK(code.decode_round(all_present(x), all_present(y)) == x);
        CHECK(code.decode_round(all_present(x), Slots(2)) == x);
    }
    SUBCASE("t = 1 over GF(2) is parity")
    {
        const ProtectionCode code = ProtectionCode::build(5, 1, 2);
        const Field f = code.field();
        for (int trial = 0; trial < 16; ++trial) {
            const SymbolVector x = random_symbols(f, 4, rng);
            const auto y = code.encode_round(x);
            for (std::size_t lost = 0; lost < 4; ++lost) {
                Slots got = all_present(x);
                got[lost].reset();
                FieldElement parity = y[0];
                for (std::size_t w = 0; w < 4; ++w)
                    if (w != lost)
                        parity = parity + x[w];
                const auto out = code.decode_round(got, all_present(y));
                CHECK(out[lost] == parity);
                CHECK(out == x);
            }
        }
    }
    SUBCASE("n = 6, t = 2, q = 5: every pair of working losses")
    {
        const ProtectionCode code = ProtectionCode::build(6, 2, 5);
        int patterns = 0;
        for (int trial = 0; trial < 25; ++trial) {
            const SymbolVector x = random_symbols(code.field(), 4, rng);
            const auto y = code.encode_round(x);
            for_each_combination(4, 2, [&](const std::vector<std::size_t>& lost) {
                Slots got = all_present(x);
                for (std::size_t w : lost)
                    got[w].reset();
                CHECK(code.decode_round(got, all_present(y)) == x);
                ++patterns;
            });
        }
        CHECK(patterns == 25 * 6);
    }
}

TEST_CASE("decode_round error paths")
{
    std::mt19937_64 rng(8);
    const ProtectionCode code = ProtectionCode::build(6, 2, 5);
    const SymbolVector x = random_symbols(code.field(), 4, rng);
    const auto y = code.encode_round(x);

    Slots three_lost = all_present(x);
    three_lost[0].reset();
    three_lost[1].reset();
    three_lost[3].reset();
    CHECK(kind_of([&] { code.decode_round(three_lost, all_present(y)); }) == ErrorKind::InsufficientEquations);

    Slots one_lost = all_present(x);
    one_lost[2].reset();
    Slots no_protection(2);
    CHECK(kind_of([&] { code.decode_round(one_lost, no_protection); }) == ErrorKind::InsufficientEquations);

    CHECK(kind_of([&] { code.decode_round(Slots(3), all_present(y)); }) == ErrorKind::LengthMismatch);
    CHECK(kind_of([&] { code.decode_round(all_present(x), Slots(1)); }) == ErrorKind::LengthMismatch);

    // Tampered protection symbol with a spare equation is caught.
    std::vector<FieldElement> bad = y;
    bad[1] = bad[1] + code.field().one();
    CHECK(kind_of([&] { code.decode_round(one_lost, all_present(bad)); }) == ErrorKind::InconsistentSymbols);
}

TEST_CASE("decode_round surfaces singular mixed systems")
{
    // GF(7), alpha = 3 of order 6: columns 0 and 3 of row 2 are
    // alpha^0 = alpha^6 = 1, same as row 0.
    const ProtectionCode code = ProtectionCode::build(8, 3, 7);
    std::mt19937_64 rng(3);
    const SymbolVector x = random_symbols(code.field(), 5, rng);
    const auto y = code.encode_round(x);
    Slots got = all_present(x);
    got[0].reset();
    got[3].reset();
    Slots prot = all_present(y);
    prot[1].reset();
    CHECK(kind_of([&] { code.decode_round(got, prot); }) == ErrorKind::SingularSystem);

    // With the third equation alive the same losses are recoverable.
    CHECK(code.decode_round(got, all_present(y)) == x);
}

TEST_CASE("encode/decode round trip, every loss set up to t, n <= 10")
{
    std::mt19937_64 rng(2024);
    for (int n = 2; n <= 10; ++n) {
        for (int t = 1; t <= n / 2; ++t) {
            const ProtectionCode code = ProtectionCode::build(n, t);
            const auto working = static_cast<std::size_t>(code.working_count());
            CAPTURE(n);
            CAPTURE(t);
            for (int trial = 0; trial < 5; ++trial) {
                const SymbolVector x = random_symbols(code.field(), working, rng);
                const auto y = code.encode_round(x);
                for (std::size_t s = 0; s <= static_cast<std::size_t>(t); ++s) {
                    for_each_combination(working, s, [&](const std::vector<std::size_t>& lost) {
                        Slots got = all_present(x);
                        for (std::size_t w : lost)
                            got[w].reset();
                        const SymbolVector out = code.decode_round(got, all_present(y));
                        REQUIRE(out == x);
                        REQUIRE(code.encode_round(out) == y);
                    });
                }
            }
        }
    }
}

TEST_CASE("vandermonde_det")
{
    const Field gf5 = make_field(5);
    const std::vector<FieldElement> one{gf5.element(3)};
    CHECK(vandermonde_det(one) == gf5.element(3));
    CHECK(vandermonde_det(one, 0) == gf5.one());

    const std::vector<FieldElement> repeated{gf5.element(2), gf5.element(4), gf5.element(2)};
    CHECK(vandermonde_det(repeated).is_zero());
    CHECK(determinant(vandermonde_matrix(repeated)).is_zero());

    // (1*2*4) * (2-1)(4-1)(4-2) = 8 * 6 = 48 = 3 mod 5.
    const std::vector<FieldElement> nodes{gf5.element(1), gf5.element(2), gf5.element(4)};
    CHECK(vandermonde_det(nodes) == gf5.element(3));
    CHECK(determinant(vandermonde_matrix(nodes)) == gf5.element(3));
    oracle::Field ref(5, 1);
    std::vector<std::vector<std::uint32_t>> raw(3, std::vector<std::uint32_t>(3));
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            raw[r][c] = ref.pow(nodes[c].index(), r + 1);
    CHECK(oracle::leibniz_det(ref, raw) == 3);
}

TEST_CASE("vandermonde_det agrees with permutation expansion")
{
    std::mt19937_64 rng(77);
    for (std::uint64_t q : {4u, 7u, 8u, 11u, 16u, 25u}) {
        const Field f = make_field(q);
        oracle::Field ref(f.characteristic(), f.degree());
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t size = 1 + rng() % 5;
            const unsigned first = static_cast<unsigned>(rng() % 4);
            const SymbolVector nodes = random_symbols(f, size, rng);
            std::vector<std::vector<std::uint32_t>> raw(size, std::vector<std::uint32_t>(size));
            for (std::size_t r = 0; r < size; ++r)
                for (std::size_t c = 0; c < size; ++c)
                    raw[r][c] = ref.pow(nodes[c].index(), first + r);
            CAPTURE(q);
            REQUIRE(vandermonde_det(nodes, first).index() == oracle::leibniz_det(ref, raw));
        }
    }
}

TEST_CASE("certify")
{
    SUBCASE("t = 1 is always certified")
    {
        for (int n = 2; n <= 10; ++n) {
            const auto cert = certify(ProtectionCode::build(n, 1));
            CHECK(cert.all_t_subsets_ok);
            CHECK(cert.mixed_ok);
            CHECK(cert.t_subsets_checked == static_cast<std::uint64_t>(n - 1));
        }
    }
    SUBCASE("n = 6, t = 2, q = 5")
    {
        const auto cert = certify(ProtectionCode::build(6, 2, 5));
        CHECK(cert.all_t_subsets_ok);
        CHECK(cert.mixed_ok);
        CHECK(cert.t_subsets_checked == 6);
        CHECK(cert.mixed_checked == binomial(2, 1) * binomial(4, 1) + binomial(2, 2) * binomial(4, 2));
        CHECK(cert.closed_form_mismatches == 0);
    }
    SUBCASE("singular mixed submatrices over GF(7) and GF(9)")
    {
        const auto c7 = certify(ProtectionCode::build(8, 3, 7));
        CHECK(c7.all_t_subsets_ok);
        CHECK_FALSE(c7.mixed_ok);
        REQUIRE(c7.counterexamples.size() == 2);
        CHECK(c7.counterexamples[0].rows == std::vector<std::size_t>{0, 2});
        CHECK(c7.counterexamples[0].columns == std::vector<std::size_t>{0, 3});
        CHECK(c7.counterexamples[1].rows == std::vector<std::size_t>{0, 2});
        CHECK(c7.counterexamples[1].columns == std::vector<std::size_t>{1, 4});

        const auto c9 = certify(ProtectionCode::build(8, 3, 9));
        CHECK_FALSE(c9.mixed_ok);
        REQUIRE(c9.counterexamples.size() == 1);
        CHECK(c9.counterexamples[0].columns == std::vector<std::size_t>{0, 4});

        CHECK(certify(ProtectionCode::build(8, 3, 8)).mixed_ok);
    }
    SUBCASE("all_t_subsets_ok at the minimum field, n <= 12")
    {
        for (int n = 2; n <= 12; ++n) {
            for (int t = 1; t <= n / 2; ++t) {
                const auto cert = certify(ProtectionCode::build(n, t));
                CAPTURE(n);
                CAPTURE(t);
                CHECK(cert.all_t_subsets_ok);
                CHECK(cert.closed_form_mismatches == 0);
                CHECK(cert.mixed_ok == cert.counterexamples.empty());
                if (cert.mixed_ok)
                    CHECK(cert.all_t_subsets_ok);
            }
        }
    }
    SUBCASE("enumeration budget")
    {
        CHECK(certify_workload(6, 2) == 6 + 8 + 6);
        CertifyOptions tight;
        tight.max_subsets = 10;
        CHECK(kind_of([&] { certify(ProtectionCode::build(6, 2), tight); }) == ErrorKind::InstanceTooLarge);
        CHECK(kind_of([] { certify(ProtectionCode::build(40, 20)); }) == ErrorKind::InstanceTooLarge);
    }
}
