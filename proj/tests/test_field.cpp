/*
 * Copyright 2026 The shadowcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "shadow/errors.hpp"
#include "shadow/field.hpp"

using namespace shadow;

namespace {

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a shadow::Error");
    return Errc::ParseError;
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kOddFields = {
    {3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {3, 3}, {5, 2}, {7, 2}, {11, 2},
    {5, 3}, {13, 2}, {17, 2}, {7, 3}};

}  // namespace

TEST_SUITE("field") {

TEST_CASE("prime and extension fields are created with the expected shape") {
    auto f3 = Field::create(3);
    CHECK(f3->order() == 3);
    CHECK(f3->degree() == 1);

    auto f8 = Field::create(2, 3);
    CHECK(f8->order() == 8);

    // Lexicographically least monic irreducible quadratic over F_3, found by
    // root exhaustion in (c0, c1) order.
    std::vector<std::uint32_t> least;
    for (std::uint32_t c0 = 0; c0 < 3 && least.empty(); ++c0) {
        for (std::uint32_t c1 = 0; c1 < 3 && least.empty(); ++c1) {
            bool has_root = false;
            for (std::uint32_t x = 0; x < 3; ++x) has_root |= (x * x + c1 * x + c0) % 3 == 0;
            if (!has_root) least = {c0, c1, 1};
        }
    }
    auto f9 = Field::create(3, 2);
    CHECK(f9->order() == 9);
    CHECK(std::vector<std::uint32_t>(f9->modulus().begin(), f9->modulus().end()) == least);
    CHECK(least == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("construction errors") {
    CHECK(code_of([] { Field::create(9); }) == Errc::NotPrime);
    CHECK(code_of([] { Field::create(3, 2, std::vector<std::uint32_t>{2, 0, 1}); }) ==
          Errc::ReducibleModulus);
    CHECK(code_of([] { Field::create(3, 2, std::vector<std::uint32_t>{1, 1}); }) ==
          Errc::DegreeMismatch);
    CHECK(code_of([] { Field::create(3, 2, std::vector<std::uint32_t>{1, 0, 2}); }) ==
          Errc::DegreeMismatch);
    CHECK(code_of([] { Field::create(3, 0); }) == Errc::DegreeMismatch);
    CHECK(code_of([] { Field::create(2, 21); }) == Errc::BadParameters);
}

TEST_CASE("explicit modulus is honoured") {
    auto f9 = Field::create(3, 2, std::vector<std::uint32_t>{2, 2, 1});  // x^2 + 2x + 2
    CHECK(f9->modulus()[1] == 2);
    // i = index 3 satisfies i^2 = -2i - 2 = i + 1 -> index 1 + 3 = 4.
    CHECK(f9->mul({3}, {3}).index == 4);
}

TEST_CASE("basic arithmetic") {
    auto f7 = Field::create(7);
    CHECK(f7->mul({3}, {5}).index == 1);
    CHECK(f7->add({5}, {4}).index == 2);
    CHECK(f7->sub({2}, {5}).index == 4);
    CHECK(f7->neg({0}).index == 0);
    CHECK(f7->pow({3}, 6) == f7->one());
    CHECK(f7->pow({0}, 0) == f7->one());
    CHECK(code_of([&] { f7->inv({0}); }) == Errc::DivisionByZero);
    CHECK(code_of([&] { f7->element(7); }) == Errc::OutOfRange);

    for (auto [p, m] : kOddFields) {
        auto f = Field::create(p, m);
        for (std::uint32_t a = 1; a < f->order(); ++a) CHECK(f->mul({a}, f->inv({a})) == f->one());
    }
}

TEST_CASE("primitive alpha of F_9 has alpha^4 = -1") {
    auto f9 = Field::create(3, 2);
    const auto alpha = f9->primitive_element();
    CHECK(f9->pow(alpha, 4) == f9->neg(f9->one()));
    // x^2 + y^2 = (x - a^2 y)(x + a^2 y): the cross terms cancel and
    // -(a^2)^2 = 1.
    const auto a2 = f9->pow(alpha, 2);
    CHECK(f9->neg(f9->mul(a2, a2)) == f9->one());
}

TEST_CASE("table and fallback arithmetic agree with explicit polynomial arithmetic") {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {3, 3}, {2, 3}, {5, 2}}) {
        auto f = Field::create(p, m);
        std::vector<std::uint32_t> modulus(f->modulus().begin(), f->modulus().end());
        for (std::uint32_t a = 0; a < f->order(); ++a) {
            for (std::uint32_t b = 0; b < f->order(); ++b) {
                CHECK(f->mul({a}, {b}).index == oracle::poly_mul(p, modulus, a, b));
                CHECK(f->add({a}, {b}).index == oracle::poly_add(p, m, a, b));
            }
        }
    }
    // q = 3^11 > 2^16 uses the untabulated path.
    auto big = Field::create(3, 11);
    CHECK_FALSE(big->has_tables());
    std::vector<std::uint32_t> modulus(big->modulus().begin(), big->modulus().end());
    std::mt19937 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const std::uint32_t a = rng() % big->order(), b = rng() % big->order();
        CHECK(big->mul({a}, {b}).index == oracle::poly_mul(3, modulus, a, b));
        if (a != 0) CHECK(big->mul({a}, big->inv({a})) == big->one());
    }
}

TEST_CASE("canonical enumeration is a bijection with digit tuples") {
    auto f = Field::create(3, 3);
    for (std::uint32_t i = 0; i < f->order(); ++i) {
        const auto d = f->digits({i});
        CHECK(f->from_digits(d).index == i);
    }
}

TEST_CASE("is_square and lg_parity") {
    auto f7 = Field::create(7);
    CHECK(f7->is_square({2}));
    CHECK_FALSE(f7->is_square({3}));
    CHECK(f7->is_square({1}));
    CHECK(f7->lg_parity({4}) == 0);
    CHECK(f7->lg_parity({3}) == 1);
    CHECK(code_of([&] { f7->is_square({0}); }) == Errc::ZeroArgument);
    auto f8 = Field::create(2, 3);
    CHECK(code_of([&] { f8->lg_parity({3}); }) == Errc::EvenCharacteristic);
}

TEST_CASE("squares form an index-2 subgroup in every odd field up to 343") {
    for (auto [p, m] : kOddFields) {
        auto f = Field::create(p, m);
        const auto sq = oracle::squares(*f);
        std::size_t zeros = 0;
        for (std::uint32_t a = 1; a < f->order(); ++a) {
            const bool is_sq = sq.count(a) > 0;
            CHECK(f->is_square({a}) == is_sq);
            zeros += f->lg_parity({a}) == 0;
        }
        CHECK(zeros == (f->order() - 1) / 2);
    }
}

TEST_CASE("lg is a homomorphism") {
    for (auto [p, m] : kOddFields) {
        auto f = Field::create(p, m);
        const auto alpha = f->primitive_element();
        for (std::uint64_t k = 0; k < 2 * f->order(); ++k) CHECK(f->lg_parity(f->pow(alpha, k)) == k % 2);
        if (f->order() <= 49) {
            for (std::uint32_t a = 1; a < f->order(); ++a) {
                CHECK(f->lg_parity(f->mul({a}, {a})) == 0);
                for (std::uint32_t b = 1; b < f->order(); ++b) {
                    CHECK(f->lg_parity(f->mul({a}, {b})) == (f->lg_parity({a}) ^ f->lg_parity({b})));
                }
            }
        } else {
            std::mt19937 rng(p * 100 + m);
            for (int i = 0; i < 3000; ++i) {
                const FieldElement a{1 + static_cast<std::uint32_t>(rng() % (f->order() - 1))};
                const FieldElement b{1 + static_cast<std::uint32_t>(rng() % (f->order() - 1))};
                CHECK(f->lg_parity(f->mul(a, b)) == (f->lg_parity(a) ^ f->lg_parity(b)));
            }
        }
    }
}

TEST_CASE("primitive element is the least-index generator") {
    auto f7 = Field::create(7);
    CHECK(f7->primitive_element().index == 3);
    CHECK(Field::create(3)->primitive_element().index == 2);

    for (auto [p, m] : kOddFields) {
        auto f = Field::create(p, m);
        std::uint32_t least = 0;
        for (std::uint32_t a = 1; a < f->order() && least == 0; ++a) {
            if (oracle::order_by_steps(*f, {a}) == f->order() - 1) least = a;
        }
        CHECK(f->primitive_element().index == least);
        const auto alpha = f->primitive_element();
        CHECK(f->pow(alpha, f->order() - 1) == f->one());
        for (std::uint64_t d = 1; d < f->order() - 1; ++d) {
            if ((f->order() - 1) % d == 0) CHECK(f->pow(alpha, d) != f->one());
        }
    }
    // F_9 = F_3[i]/(i^2 + 1): 1 + i (index 4) is the first element of order 8.
    CHECK(Field::create(3, 2)->primitive_element().index == 4);
}

TEST_CASE("find_odd_prime_power") {
    auto r = find_odd_prime_power(121);
    REQUIRE(r);
    CHECK(r->p == 11);
    CHECK(r->m == 2);
    CHECK_FALSE(find_odd_prime_power(1024));
    CHECK_FALSE(find_odd_prime_power(15));
    auto prime = find_odd_prime_power(113);
    REQUIRE(prime);
    CHECK(prime->p == 113);
    CHECK(prime->m == 1);
    CHECK(find_odd_prime_power(243)->m == 5);
}

}
