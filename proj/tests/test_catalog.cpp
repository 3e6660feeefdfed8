#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "hforge/catalog.hpp"

using namespace hforge;

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    REQUIRE(is);
    return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "hforge-test-cache") {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("sieve counts") {
    const SieveCounts tiny = sieve_counts(4);
    CHECK(tiny.count_form == 1);
    CHECK(tiny.count_3mod8 == 1);

    const SieveCounts c = sieve_counts(100000);
    CHECK(c.count_form == 58);
    CHECK(c.count_3mod8 == 2416);

    CHECK_THROWS_AS(sieve_counts(200'000'000), BoundTooLarge);
}

TEST_CASE("perfect power detection") {
    CHECK(perfect_power(49) == std::pair<std::uint64_t, unsigned>{7, 2});
    CHECK(perfect_power(64) == std::pair<std::uint64_t, unsigned>{2, 6});
    CHECK(perfect_power(729) == std::pair<std::uint64_t, unsigned>{3, 6});
    CHECK_FALSE(perfect_power(12).has_value());
    CHECK_FALSE(perfect_power(3).has_value());
    CHECK_FALSE(perfect_power(9999999967ULL).has_value()); // prime
}

TEST_CASE("proper prime power scan") {
    CHECK(conjecture_scan(100000).empty());
    CHECK_THROWS_AS(conjecture_scan(200'000'000'000'000ULL), BoundTooLarge);
}

TEST_CASE("cache directory resolution") {
    CHECK(resolve_cache_dir("/tmp/explicit") == fs::path("/tmp/explicit"));

    setenv("HFORGE_CACHE", "/tmp/from-env", 1);
    CHECK(resolve_cache_dir("") == fs::path("/tmp/from-env"));
    CHECK(resolve_cache_dir("/tmp/explicit") == fs::path("/tmp/explicit"));

    unsetenv("HFORGE_CACHE");
    CHECK(resolve_cache_dir("") == fs::path(".hforge"));
}

TEST_CASE("pipeline produces verified artifacts") {
    TempDir tmp;

    const PipelineResult gs = run_pipeline(3, Method::GS, tmp.path);
    CHECK(gs.entry.hadamard_order_gs == 36);
    CHECK(gs.entry.hadamard_order_ww == 76);
    CHECK(gs.entry.gs_verified);
    CHECK(fs::exists(gs.matrix_path));
    CHECK(!gs.log.empty());

    const PipelineResult ww = run_pipeline(3, Method::WW, tmp.path);
    CHECK(ww.entry.ww_verified);
    CHECK(fs::exists(ww.family_path));
    CHECK(fs::exists(ww.matrix_path));
    CHECK(fs::exists(scheme_cache_path(tmp.path)));

    // warm-cache rerun is byte identical
    const std::string first = slurp(ww.matrix_path);
    const PipelineResult again = run_pipeline(3, Method::WW, tmp.path);
    CHECK(slurp(again.matrix_path) == first);
}

TEST_CASE("pipeline rejects bad q") {
    TempDir tmp;
    CHECK_THROWS_AS(run_pipeline(7, Method::WW, tmp.path), NotAdmissible);
    CHECK_THROWS_AS(run_pipeline(12, Method::GS, tmp.path), NotAdmissible);
}

TEST_CASE("ww pipeline needs the calibration cache for larger q") {
    TempDir tmp;
    CHECK_THROWS_AS(run_pipeline(11, Method::WW, tmp.path), Error);
    // after calibrating at q=3 the same cache unlocks q=11
    run_pipeline(3, Method::WW, tmp.path);
    const PipelineResult r = run_pipeline(11, Method::WW, tmp.path);
    CHECK(r.entry.ww_verified);
    CHECK(r.entry.hadamard_order_ww == 972);
}
