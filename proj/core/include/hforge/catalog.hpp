#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hforge/constructions.hpp"

namespace hforge {

struct SieveCounts {
    std::uint64_t count_form = 0;  // admissible q below the bound
    std::uint64_t count_3mod8 = 0; // all prime powers = 3 (mod 8) below it
};

/// Prime sieve plus explicit prime-power expansion; bound guard 10^8.
SieveCounts sieve_counts(std::uint64_t max);

/// Smallest-base perfect power decomposition n = b^e with e > 1, if any.
std::optional<std::pair<std::uint64_t, unsigned>> perfect_power(std::uint64_t n);

/// Values 12c^2+4c+3 below max that are proper prime powers p^a, a > 1.
/// Expected empty; bound guard 10^14.
std::vector<std::uint64_t> conjecture_scan(std::uint64_t max);

struct CatalogEntry {
    std::uint64_t q = 0;
    std::int64_t c = 0;
    std::int64_t m = 0;
    std::int64_t a = 0;
    std::int64_t b_abs = 0;
    std::uint64_t hadamard_order_gs = 0; // 4 q^2
    std::uint64_t hadamard_order_ww = 0; // 4 (2 q^2 + 1)
    bool family_verified = false;
    bool gs_verified = false;
    bool ww_verified = false;
};

enum class Method { GS, WW };

/// Resolution order: explicit override, then HFORGE_CACHE, then ".hforge".
std::filesystem::path resolve_cache_dir(const std::string& override_dir);

struct PipelineResult {
    CatalogEntry entry;
    std::filesystem::path family_path; // empty for the gs route
    std::filesystem::path matrix_path;
    std::vector<std::string> log; // stage lines with timings
};

/// Field -> params -> family -> verify -> assemble -> verify -> write files.
/// For WW, the calibration cache must exist unless q = 3 (auto-calibrates).
PipelineResult run_pipeline(std::uint64_t q, Method method,
                            const std::filesystem::path& cache_dir);

std::filesystem::path scheme_cache_path(const std::filesystem::path& cache_dir);

} // namespace hforge
