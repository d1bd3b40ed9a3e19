#include <doctest.h>

#include <numeric>

#include "ecc/field.hpp"
#include "oracles.hpp"

using namespace ecc;

TEST_CASE("order_mod table") {
    CHECK(order_mod(2, 7) == 3);
    CHECK(order_mod(3, 7) == 6);
    CHECK(order_mod(29, 7) == 1);
    CHECK(order_mod(3, 10) == 4);
    CHECK(order_mod(11, 10) == 1);
    CHECK(order_mod(2, 31) == 5);
    CHECK(order_mod(3, 400) == 20);
    CHECK(order_mod(7, 400) == 4);
    CHECK(order_mod(401, 400) == 1);
    CHECK(order_mod(2, 511) == 9);
    for (unsigned i = 2; i <= 16; ++i) CHECK(order_mod(2, (1u << i) - 1) == i);
}

TEST_CASE("order_mod matches a direct power loop") {
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        for (std::uint64_t n = 2; n < 60; ++n) {
            if (std::gcd(p, n) != 1) {
                CHECK_THROWS_AS(order_mod(p, n), CodeError);
                continue;
            }
            unsigned s = 1;
            std::uint64_t acc = p % n;
            while (acc != 1 % n) {
                acc = acc * p % n;
                ++s;
            }
            CHECK(order_mod(p, n) == s);
        }
    }
}

TEST_CASE("prime helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(401));
    CHECK(is_prime(487));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(511));
    CHECK(prime_power(256) == std::pair<std::uint64_t, unsigned>{2, 8});
    CHECK(prime_power(121) == std::pair<std::uint64_t, unsigned>{11, 2});
    CHECK(prime_power(12).second == 0);
    CHECK(prime_factors(480) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(mod_pow(3, 20, 400) == 1);
}

TEST_CASE("GF(8) multiplication agrees with schoolbook polynomial products") {
    auto f = build_field(2, 3);
    const oracle::Poly mod = f->modulus();
    for (std::uint32_t a = 0; a < 8; ++a) {
        for (std::uint32_t b = 0; b < 8; ++b) {
            const auto expect = oracle::mul_mod(f->coeffs(FieldElement{a}), f->coeffs(FieldElement{b}), mod, 2);
            CHECK(f->coeffs(f->mul(FieldElement{a}, FieldElement{b})) == expect);
        }
    }
}

TEST_CASE("table and slow arithmetic agree with the oracle on larger fields") {
    for (auto [p, s] : {std::pair<std::uint64_t, unsigned>{3, 4}, {11, 2}, {2, 9}, {7, 3}}) {
        auto f = build_field(p, s);
        CAPTURE(p);
        CAPTURE(s);
        std::uint32_t a = 1;
        for (int t = 0; t < 300; ++t) {
            a = static_cast<std::uint32_t>((a * 2654435761u + 17) % f->order());
            const std::uint32_t b = static_cast<std::uint32_t>((a * 40503u + 3) % f->order());
            const FieldElement x{a}, y{b};
            CHECK(f->coeffs(f->mul(x, y)) == oracle::mul_mod(f->coeffs(x), f->coeffs(y), f->modulus(), f->p()));
            if (!x.is_zero()) CHECK(f->mul(x, f->inv(x)) == f->one());
            CHECK(f->add(f->sub(x, y), y) == x);
        }
    }
}

TEST_CASE("modulus is the smallest irreducible polynomial") {
    for (auto [p, s] : {std::pair<std::uint32_t, unsigned>{2, 3}, {2, 4}, {2, 8}, {3, 2}, {3, 4}, {5, 3}, {11, 2}}) {
        auto f = build_field(p, s);
        CHECK(oracle::irreducible(f->modulus(), p));
        CHECK(f->modulus().back() == 1);
        // Every monic candidate with a smaller packed tail must be reducible.
        std::uint64_t packed = 0, scale = 1;
        for (unsigned i = 0; i < s; ++i, scale *= p) packed += f->modulus()[i] * scale;
        for (std::uint64_t c = 0; c < packed; ++c) {
            oracle::Poly g(s + 1, 0);
            std::uint64_t v = c;
            for (unsigned i = 0; i < s; ++i, v /= p) g[i] = v % p;
            g[s] = 1;
            CHECK_FALSE(oracle::irreducible(g, p));
        }
    }
    CHECK(build_field(2, 4)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
}

TEST_CASE("generator and element orders") {
    auto f = build_field(2, 4);
    CHECK(f->element_order(f->generator()) == 15);
    CHECK(f->element_order(element_of_order(*f, 5)) == 5);
    CHECK_THROWS_AS(element_of_order(*build_field(2, 5), 15), CodeError);
    auto g = build_field(401, 1);
    CHECK(g->element_order(element_of_order(*g, 400)) == 400);
}

TEST_CASE("tables only below the size limit; large fields still work") {
    CHECK(build_field(2, 16)->has_tables());
    auto big = build_field(2, 21);
    CHECK_FALSE(big->has_tables());
    const FieldElement x{123457};
    CHECK(big->pow(x, big->order() - 1) == big->one());
    CHECK(big->mul(x, big->inv(x)) == big->one());
}

TEST_CASE("frobenius is additive and fixes the prime field") {
    auto f = build_field(3, 4);
    for (std::uint32_t a = 0; a < 81; a += 7) {
        for (std::uint32_t b = 0; b < 81; b += 11) {
            const FieldElement x{a}, y{b};
            CHECK(f->frobenius(f->add(x, y), 9) == f->add(f->frobenius(x, 9), f->frobenius(y, 9)));
        }
    }
    for (std::uint32_t a = 0; a < 3; ++a) CHECK(f->frobenius(FieldElement{a}, 3) == FieldElement{a});
}

TEST_CASE("format and parse round trip") {
    for (auto [p, s] : {std::pair<std::uint64_t, unsigned>{2, 3}, {11, 1}, {3, 4}}) {
        auto f = build_field(p, s);
        for (std::uint32_t a = 0; a < f->order(); ++a) CHECK(f->parse(f->format(FieldElement{a})) == FieldElement{a});
    }
    CHECK(build_field(11, 1)->from_int(-1) == FieldElement{10});
}

TEST_CASE("invalid fields are rejected") {
    CHECK_THROWS_AS(build_field(4, 2), CodeError);
    CHECK_THROWS_AS(build_field(2, 0), CodeError);
    CHECK_THROWS_AS(build_field(487, 4), CodeError);
    CHECK_THROWS_AS(build_field_with_modulus(2, {1, 0, 1}), CodeError);
}
