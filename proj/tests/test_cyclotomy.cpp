#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "hforge/cyclotomy.hpp"

using namespace hforge;

namespace {

CycloCtx ctx_for(std::uint64_t q) { return CycloCtx::build(make_prime_power(q)); }

} // namespace

TEST_CASE("cyclotomic classes partition the nonzero elements") {
    const CycloCtx ctx = ctx_for(11);
    for (std::uint32_t N : {4u, 8u, 12u, 24u}) {
        std::vector<char> seen(ctx.field().order(), 0);
        for (std::uint32_t i = 0; i < N; ++i) {
            const Block c = ctx.cyclotomic_class(N, i);
            CHECK(c.size() == (ctx.field().order() - 1) / N);
            for (auto x : c) {
                CHECK(seen[x] == 0);
                seen[x] = 1;
                CHECK(ctx.class_index(x, N) == i);
            }
        }
        CHECK(std::count(seen.begin() + 1, seen.end(), 1) ==
              static_cast<long>(ctx.field().order() - 1));
    }
    CHECK_THROWS_AS(ctx.cyclotomic_class(7, 0), BadModulus);
}

TEST_CASE("q=3 singleton classes") {
    const CycloCtx ctx = ctx_for(3);
    CHECK(ctx.cyclotomic_class(8, 0) == Block{1});
}

TEST_CASE("named set sizes and refinements") {
    const CycloCtx ctx3 = ctx_for(3);
    for (std::uint32_t i = 0; i < 4; ++i) {
        CHECK(ctx3.named_set(CycloCtx::NamedSet::S, i).size() == 3);
        CHECK(ctx3.named_set(CycloCtx::NamedSet::D, i).size() == 4);
    }
    CHECK_THROWS_AS(ctx3.named_set(CycloCtx::NamedSet::S, 4), IndexOutOfRange);
    CHECK_THROWS_AS(ctx3.named_set(CycloCtx::NamedSet::D, 4), IndexOutOfRange);

    const CycloCtx ctx11 = ctx_for(11);
    for (std::uint32_t i = 0; i < 12; ++i) {
        const Block h = ctx11.named_set(CycloCtx::NamedSet::H, i);
        CHECK(h.size() == 5);
        const Block h2 = ctx11.named_set(CycloCtx::NamedSet::H, i + 12);
        Block merged;
        std::merge(h.begin(), h.end(), h2.begin(), h2.end(), std::back_inserter(merged));
        CHECK(merged == ctx11.named_set(CycloCtx::NamedSet::L, i));
    }
}

TEST_CASE("brute-force table basics") {
    const CycloCtx ctx = ctx_for(3);
    const CycloTable t = cyclotomic_numbers_bruteforce(ctx, 8);
    // in characteristic 3: 1+1 = -1 = omega^4, so (0,4) = 1 in any presentation
    CHECK(t.at(0, 4) == 1);
    CHECK(t.total() == 7);

    const CycloTable t11 = cyclotomic_numbers_bruteforce(ctx_for(11), 8);
    CHECK(t11.total() == 119);
}

TEST_CASE("two-square representation") {
    const TwoSquareRep r3 = solve_a_b(make_prime_power(3));
    CHECK(r3.a == 1);
    CHECK(r3.b_abs == 2);

    const TwoSquareRep r11 = solve_a_b(make_prime_power(11));
    CHECK(r11.a == -7);
    CHECK(r11.b_abs == 6);

    const TwoSquareRep r19 = solve_a_b(make_prime_power(19));
    CHECK(r19.a == 17);
    CHECK(r19.b_abs == 6);

    for (std::uint64_t q : {3, 11, 19, 43, 59}) {
        const TwoSquareRep r = solve_a_b(make_prime_power(q));
        CHECK(r.a * r.a + 2 * r.b_abs * r.b_abs == static_cast<std::int64_t>(q * q));
        CHECK(((r.a % 4) + 4) % 4 == 1);
        CHECK(std::gcd(r.a, r.b_abs) == 1);
    }
}

TEST_CASE("closed-form n values at q=3") {
    const auto plus = cyclotomic_n_values(make_prime_power(3), 1, 2);
    CHECK(plus == std::array<std::int64_t, 9>{0, 0, 0, 0, 1, 0, 1, 0, 0});
    const auto minus = cyclotomic_n_values(make_prime_power(3), 1, -2);
    CHECK(minus == std::array<std::int64_t, 9>{0, 0, 0, 0, 1, 0, 0, 1, 0});
    CHECK_THROWS_AS(cyclotomic_n_values(make_prime_power(3), 1, 1), NonIntegerCount);
}

TEST_CASE("table pattern multiplicities") {
    std::map<int, int> mult;
    for (const auto& row : kCycloPattern8)
        for (int v : row) ++mult[v];
    CHECK(mult[1] == 3);
    CHECK(mult[2] == 24);
    CHECK(mult[3] == 6);
    CHECK(mult[4] == 1);
    CHECK(mult[5] == 12);
    CHECK(mult[6] == 6);
    CHECK(mult[7] == 6);
    CHECK(mult[8] == 6);
    int total = 0;
    for (auto [v, c] : mult) total += c;
    CHECK(total == 64);
}

TEST_CASE("formula table totals match the counting identity") {
    for (std::uint64_t q : {3, 11, 19}) {
        const CycloCtx ctx = ctx_for(q);
        const TwoSquareRep rep = fit_b_sign(ctx, solve_a_b(ctx.q()));
        const CycloTable t = cyclotomic_numbers_formula(ctx.q(), rep);
        CHECK(t.total() == static_cast<std::int64_t>(q * q) - 2);
    }
}

TEST_CASE("fitted formula equals brute force") {
    for (std::uint64_t q : {3, 11, 19}) {
        const CycloCtx ctx = ctx_for(q);
        const TwoSquareRep rep = fit_b_sign(ctx, solve_a_b(ctx.q()));
        REQUIRE(rep.b_signed.has_value());
        CHECK(cyclotomic_numbers_formula(ctx.q(), rep) ==
              cyclotomic_numbers_bruteforce(ctx, 8));
    }
    // frozen values for the canonical presentations
    CHECK(*fit_b_sign(ctx_for(3), solve_a_b(make_prime_power(3))).b_signed == -2);
    CHECK(*fit_b_sign(ctx_for(11), solve_a_b(make_prime_power(11))).b_signed == -6);
    CHECK(*fit_b_sign(ctx_for(19), solve_a_b(make_prime_power(19))).b_signed == 6);
}

TEST_CASE("unset sign is rejected") {
    TwoSquareRep rep = solve_a_b(make_prime_power(3));
    CHECK_THROWS_AS(cyclotomic_numbers_formula(make_prime_power(3), rep), FitFailure);
}

TEST_CASE("intersection counts N1..N4") {
    // canonical GF(9) has fitted b=-2, so I={0,2,3} is the good choice
    const CycloCtx ctx = ctx_for(3);
    const auto good = compute_N1_to_N4(ctx, {0, 2, 3});
    CHECK(good == std::array<std::int64_t, 4>{2, 2, 4, 0});
    const auto bad = compute_N1_to_N4(ctx, {0, 2, 7});
    CHECK(bad[0] == bad[1]);
    CHECK(bad[2] == bad[3]); // wrong I for this presentation: N3 = N4

    const auto n11 = compute_N1_to_N4(ctx_for(11), {0, 2, 7});
    CHECK(n11 == std::array<std::int64_t, 4>{33, 33, 36, 32});
    const auto n19 = compute_N1_to_N4(ctx_for(19), {0, 2, 3});
    CHECK(n19 == std::array<std::int64_t, 4>{100, 100, 104, 100 - 4 + 4});
    CHECK(n19[2] == n19[3] + 4);
}

TEST_CASE("closed forms for N3 and N4") {
    // b_eff = +b for I={0,2,3}, -b for I={0,2,7}
    struct Case {
        std::uint64_t q;
        std::array<int, 3> I;
    };
    for (const Case& cs : {Case{3, {0, 2, 3}}, Case{11, {0, 2, 7}}, Case{19, {0, 2, 3}}}) {
        const CycloCtx ctx = ctx_for(cs.q);
        const TwoSquareRep rep = fit_b_sign(ctx, solve_a_b(ctx.q()));
        const std::int64_t b_eff =
            (cs.I == std::array<int, 3>{0, 2, 3}) ? *rep.b_signed : -*rep.b_signed;
        const auto [n3, n4] = closed_form_N3_N4(ctx.q(), rep.a, b_eff);
        const auto counted = compute_N1_to_N4(ctx, cs.I);
        CHECK(n3 == counted[2]);
        CHECK(n4 == counted[3]);
    }
}
