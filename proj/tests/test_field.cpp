#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hforge/field.hpp"

using namespace hforge;

TEST_CASE("prime power factorization") {
    CHECK(is_prime(2));
    CHECK(is_prime(8191));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));

    const PrimePower nine = make_prime_power(9);
    CHECK(nine.p == 3);
    CHECK(nine.s == 2);

    const PrimePower eleven = make_prime_power(11);
    CHECK(eleven.p == 11);
    CHECK(eleven.s == 1);

    CHECK_THROWS_AS(make_prime_power(12), NotAPrimePower);
    CHECK_THROWS_AS(make_prime_power(1), NotAPrimePower);
}

TEST_CASE("GF(9) canonical presentation") {
    const FieldCtx f = FieldCtx::build(3, 2);
    // x^2 and x^2+... with lower encodings are reducible; x^2+1 is the first
    CHECK(f.modulus() == std::vector<std::uint32_t>{1, 0, 1});
    // 1 and 2 have order <= 2, x has order 4 (x^2 = -1), x+1 has order 8
    CHECK(f.omega() == f.encode({1, 1}));
    CHECK(f.header() == "GF(3^2) mod [1,0,1]");
}

TEST_CASE("GF(9) arithmetic") {
    const FieldCtx f = FieldCtx::build(3, 2);
    const Elem x1 = f.encode({1, 1}); // x+1
    CHECK(f.mul(x1, x1) == f.encode({0, 2})); // (x+1)^2 = 2x since x^2 = -1
    CHECK(f.pow(x1, 4) == f.encode({2, 0}));  // = -1
    for (Elem a = 1; a < f.order(); ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK_THROWS_AS(f.inv(0), DivisionByZero);
}

TEST_CASE("log and antilog") {
    const FieldCtx f = FieldCtx::build(11, 2);
    CHECK(f.log(1) == 0);
    CHECK(f.log(f.omega()) == 1);
    CHECK(f.log(f.neg(1)) == (f.order() - 1) / 2);
    CHECK_THROWS_AS(f.log(0), LogOfZero);
    for (Elem x = 1; x < f.order(); ++x) CHECK(f.antilog(f.log(x)) == x);
    for (std::uint32_t i = 0; i + 1 < f.order(); ++i) CHECK(f.log(f.antilog(i)) == i);
}

TEST_CASE("omega has full multiplicative order") {
    const FieldCtx f = FieldCtx::build(3, 2);
    const std::uint32_t n = f.order() - 1;
    CHECK(f.pow(f.omega(), n) == 1);
    for (std::uint32_t d = 1; d < n; ++d)
        if (n % d == 0) CHECK(f.pow(f.omega(), d) != 1);
}

TEST_CASE("Frobenius fixes the prime field extension") {
    const FieldCtx f = FieldCtx::build(19, 2);
    std::mt19937 rng(12345);
    std::uniform_int_distribution<Elem> pick(0, f.order() - 1);
    for (int t = 0; t < 1000; ++t) {
        const Elem x = pick(rng);
        Elem acc = x;
        // x^(p^k) via repeated p-th powers
        for (unsigned i = 0; i < f.degree(); ++i)
            acc = (acc == 0) ? 0 : f.pow(acc, static_cast<std::int64_t>(f.p()));
        CHECK(acc == x);
    }
}

TEST_CASE("construction is deterministic") {
    const FieldCtx a = FieldCtx::build(11, 2);
    const FieldCtx b = FieldCtx::build(11, 2);
    CHECK(a == b);
}

TEST_CASE("degenerate degree 1") {
    const FieldCtx f = FieldCtx::build(3, 1);
    CHECK(f.modulus() == std::vector<std::uint32_t>{0, 1});
    CHECK(f.omega() == 2);
    CHECK(f.order() == 3);
}

TEST_CASE("table size guard") {
    CHECK_THROWS_AS(FieldCtx::build(2, 27), TableTooLarge);
}
