#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hforge/assembly.hpp"
#include "hforge/verify.hpp"

using namespace hforge;

namespace {

CycloCtx ctx_for(std::uint64_t q) { return CycloCtx::build(make_prime_power(q)); }

} // namespace

TEST_CASE("family verification") {
    const CycloCtx ctx = ctx_for(3);
    DiffFamily fam = build_family(ctx, derive_params(ctx));
    const VerifyReport good = verify_difference_family(fam);
    CHECK(good.passed);
    CHECK(good.details.empty());
    CHECK(good.to_string().rfind("PASS", 0) == 0);

    // autocorrelation oracle: lambda everywhere, sum k_i at the identity
    const GroupRingElem autoc = family_autocorrelation(fam.ctx, fam.blocks);
    CHECK(autoc.coeffs[0] == 35);
    for (std::uint32_t x = 1; x < fam.ctx.order(); ++x) CHECK(autoc.coeffs[x] == 16);

    // replace one element of a block with a value outside it
    Block& b = fam.blocks[2];
    for (std::uint32_t cand = 0; cand < fam.ctx.order(); ++cand) {
        if (std::find(b.begin(), b.end(), cand) == b.end()) {
            b[0] = cand;
            break;
        }
    }
    std::sort(b.begin(), b.end());
    const VerifyReport bad = verify_difference_family(fam);
    CHECK_FALSE(bad.passed);
    CHECK(!bad.details.empty());
}

TEST_CASE("declared sizes are enforced") {
    const CycloCtx ctx = ctx_for(3);
    DiffFamily fam = build_family(ctx, derive_params(ctx));
    fam.blocks[1].pop_back();
    const VerifyReport r = verify_difference_family(fam);
    CHECK_FALSE(r.passed);
    CHECK(r.details.find("block 1") != std::string::npos);
}

TEST_CASE("Paley set verification") {
    const CycloCtx c3 = ctx_for(3);
    const GroupCtx g3 = GroupCtx::from_field(GroupKind::FieldAdditive, c3.field());
    for (std::uint32_t i = 0; i < 4; ++i)
        CHECK(verify_pds(g3, build_paley_pds(c3, i)).passed);

    const CycloCtx c11 = ctx_for(11);
    const GroupCtx g11 = GroupCtx::from_field(GroupKind::FieldAdditive, c11.field());
    for (std::uint32_t i = 0; i < 4; ++i)
        CHECK(verify_pds(g11, build_paley_pds(c11, i)).passed);

    CHECK_FALSE(verify_pds(g3, Block{1, 2, 3, 4}).passed); // generic subset
    CHECK_FALSE(verify_pds(g3, Block{0, 1, 2, 3}).passed); // contains zero
}

TEST_CASE("type H verification") {
    for (std::uint64_t q : {3, 11}) {
        const CycloCtx ctx = ctx_for(q);
        const auto e = build_E_blocks(derive_params(ctx), ctx);
        const GroupCtx g = GroupCtx::from_field(GroupKind::FieldAdditive, ctx.field());
        const VerifyReport r = verify_type_H(g, {e[0], e[1], e[2], e[3]});
        CHECK(r.passed);
        const std::int64_t lambda = q * (q - 2);
        CHECK(r.subject.find("lambda=" + std::to_string(lambda)) != std::string::npos);
    }

    // the Z2-lifted family is type H4*, not type H
    const CycloCtx ctx = ctx_for(3);
    const DiffFamily fam = build_family(ctx, derive_params(ctx));
    CHECK_FALSE(verify_type_H(fam.ctx, fam.blocks).passed);
}

TEST_CASE("cross condition") {
    for (std::uint64_t q : {3, 11}) {
        const CycloCtx ctx = ctx_for(q);
        const auto e = build_E_blocks(derive_params(ctx), ctx);
        CHECK(verify_cross_condition(ctx, e).passed);
    }

    // the wrong index triple for the presentation fails
    const CycloCtx ctx = ctx_for(3);
    QParams p = derive_params(ctx);
    p.I = {0, 2, 7};
    p.y = 7;
    const auto e = build_E_blocks(p, ctx);
    CHECK_FALSE(verify_cross_condition(ctx, e).passed);
}

TEST_CASE("class cross-product identity") {
    for (std::uint64_t q : {3, 11, 19}) {
        const CycloCtx ctx = ctx_for(q);
        const QParams p = derive_params(ctx);
        const auto e = build_E_blocks(p, ctx);
        CHECK(verify_lemma_3_3(ctx, e, p).passed);
    }
}

TEST_CASE("matrix verification") {
    SignMatrix two(2);
    two.set(1, 1, -1);
    CHECK(verify_hadamard(two).passed);

    const CycloCtx ctx = ctx_for(3);
    const auto e = build_E_blocks(derive_params(ctx), ctx);
    const GroupCtx g = GroupCtx::from_field(GroupKind::FieldAdditive, ctx.field());
    std::array<SignMatrix, 4> mats = {
        block_to_sign_matrix(g, e[0]), block_to_sign_matrix(g, e[1]),
        block_to_sign_matrix(g, e[2]), block_to_sign_matrix(g, e[3])};
    SignMatrix h =
        goethals_seidel({&mats[0], &mats[1], &mats[2], &mats[3]}, inversion_perm(g));
    CHECK(verify_hadamard(h).passed);

    h.set(5, 7, -h.get(5, 7));
    const VerifyReport r = verify_hadamard(h);
    CHECK_FALSE(r.passed);
    CHECK(r.details.find("rows") != std::string::npos);
}
