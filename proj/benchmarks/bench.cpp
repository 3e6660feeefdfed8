#include <benchmark/benchmark.h>

#include "hforge/assembly.hpp"
#include "hforge/constructions.hpp"
#include "hforge/verify.hpp"

using namespace hforge;

namespace {

const CycloCtx& ctx11() {
    static const CycloCtx ctx = CycloCtx::build(make_prime_power(11));
    return ctx;
}

void BM_field_build(benchmark::State& state) {
    for (auto _ : state) {
        FieldCtx f = FieldCtx::build(static_cast<std::uint64_t>(state.range(0)), 2);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_field_build)->Arg(11)->Arg(43)->Arg(179);

void BM_cyclotomic_table(benchmark::State& state) {
    const CycloCtx ctx = CycloCtx::build(make_prime_power(state.range(0)));
    for (auto _ : state) {
        CycloTable t = cyclotomic_numbers_bruteforce(ctx, 8);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_cyclotomic_table)->Arg(11)->Arg(43);

void BM_difference_product(benchmark::State& state) {
    const CycloCtx& ctx = ctx11();
    const DiffFamily fam = build_family(ctx, derive_params(ctx));
    for (auto _ : state) {
        GroupRingElem e =
            difference_product(fam.ctx, fam.blocks[0], fam.blocks[0]);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_difference_product);

void BM_family_verify(benchmark::State& state) {
    const CycloCtx& ctx = ctx11();
    const DiffFamily fam = build_family(ctx, derive_params(ctx));
    for (auto _ : state) {
        VerifyReport r = verify_difference_family(fam);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_family_verify);

void BM_hadamard_verify(benchmark::State& state) {
    const CycloCtx& ctx = ctx11();
    const auto e = build_E_blocks(derive_params(ctx), ctx);
    const GroupCtx g = GroupCtx::from_field(GroupKind::FieldAdditive, ctx.field());
    std::array<SignMatrix, 4> mats = {
        block_to_sign_matrix(g, e[0]), block_to_sign_matrix(g, e[1]),
        block_to_sign_matrix(g, e[2]), block_to_sign_matrix(g, e[3])};
    const SignMatrix h =
        goethals_seidel({&mats[0], &mats[1], &mats[2], &mats[3]}, inversion_perm(g));
    for (auto _ : state) {
        VerifyReport r = verify_hadamard(h);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_hadamard_verify);

} // namespace

BENCHMARK_MAIN();
