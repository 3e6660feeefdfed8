#include "hforge/catalog.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hforge/assembly.hpp"
#include "hforge/io.hpp"
#include "hforge/verify.hpp"

namespace hforge {

SieveCounts sieve_counts(std::uint64_t max) {
    if (max > 100'000'000) throw BoundTooLarge("sieve bound exceeds 10^8");
    SieveCounts out;

    std::vector<bool> composite(max, false);
    for (std::uint64_t i = 2; i * i < max; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j < max; j += i) composite[j] = true;
    }
    auto prime = [&](std::uint64_t n) { return n >= 2 && !composite[n]; };

    for (std::uint64_t p = 2; p < max; ++p) {
        if (!prime(p)) continue;
        std::uint64_t v = p;
        while (v < max) {
            if (v % 8 == 3) ++out.count_3mod8;
            if (v > (max - 1) / p) break;
            v *= p;
        }
    }

    for (int sign : {1, -1}) {
        for (std::int64_t i = (sign > 0) ? 0 : 1;; ++i) {
            const std::int64_t c = sign * i;
            const auto v = static_cast<std::uint64_t>(12 * c * c + 4 * c + 3);
            if (v >= max) break;
            // every admissible value is odd and = 3 (mod 8); prime-power test
            // against the sieve
            std::uint64_t n = v;
            bool pp = false;
            for (std::uint64_t p = 2; p * p <= n; ++p) {
                if (n % p != 0) continue;
                while (n % p == 0) n /= p;
                pp = (n == 1);
                n = 0;
                break;
            }
            if (n > 1) pp = true; // v itself prime
            if (pp) ++out.count_form;
        }
    }
    return out;
}

std::optional<std::pair<std::uint64_t, unsigned>> perfect_power(std::uint64_t n) {
    if (n < 4) return std::nullopt;
    for (unsigned e = 63; e >= 2; --e) {
        if ((n >> e) == 0) continue; // 2^e > n
        auto r = static_cast<std::uint64_t>(std::llround(std::pow(double(n), 1.0 / e)));
        for (std::uint64_t b = (r > 1 ? r - 1 : 2); b <= r + 1; ++b) {
            if (b < 2) continue;
            std::uint64_t acc = 1;
            bool overflow = false;
            for (unsigned i = 0; i < e; ++i) {
                if (acc > n / b) {
                    overflow = true;
                    break;
                }
                acc *= b;
            }
            if (!overflow && acc == n) return std::make_pair(b, e);
        }
    }
    return std::nullopt;
}

std::vector<std::uint64_t> conjecture_scan(std::uint64_t max) {
    if (max > 100'000'000'000'000ULL) throw BoundTooLarge("scan bound exceeds 10^14");
    std::vector<std::uint64_t> hits;
    for (int sign : {1, -1}) {
        for (std::int64_t i = (sign > 0) ? 0 : 1;; ++i) {
            const std::int64_t c = sign * i;
            const auto v = static_cast<std::uint64_t>(12 * c * c + 4 * c + 3);
            if (v >= max) break;
            if (const auto pp = perfect_power(v); pp && is_prime(pp->first))
                hits.push_back(v);
        }
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    return hits;
}

std::filesystem::path resolve_cache_dir(const std::string& override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("HFORGE_CACHE"); env && *env) return env;
    return ".hforge";
}

std::filesystem::path scheme_cache_path(const std::filesystem::path& cache_dir) {
    return cache_dir / "border_schemes.txt";
}

namespace {

class StageLog {
public:
    explicit StageLog(std::vector<std::string>& sink) : sink_(sink) {}
    template <typename F>
    auto run(const std::string& name, F&& f) {
        const auto start = std::chrono::steady_clock::now();
        auto result = f();
        const auto ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::ostringstream os;
        os << "stage=" << name << " ms=" << std::llround(ms);
        sink_.push_back(os.str());
        return result;
    }

private:
    std::vector<std::string>& sink_;
};

void require(const VerifyReport& r, const std::string& stage) {
    if (!r.passed) throw Error(stage + " failed: " + r.to_string());
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot write " + path.string());
    os << content;
}

} // namespace

PipelineResult run_pipeline(std::uint64_t q, Method method,
                            const std::filesystem::path& cache_dir) {
    PipelineResult result;
    StageLog log(result.log);

    {
        const auto admissible = admissible_q_list(q + 1);
        if (admissible.empty() || admissible.back() != q)
            throw NotAdmissible("q is not an admissible prime power: " + std::to_string(q));
    }
    std::filesystem::create_directories(cache_dir);

    const PrimePower qp = make_prime_power(q);
    const CycloCtx ctx = log.run("field", [&] { return CycloCtx::build(qp); });
    const QParams params = log.run("params", [&] { return derive_params(ctx); });

    result.entry.q = q;
    result.entry.c = params.c;
    result.entry.m = params.m;
    result.entry.a = params.rep.a;
    result.entry.b_abs = params.rep.b_abs;
    result.entry.hadamard_order_gs = 4 * q * q;
    result.entry.hadamard_order_ww = 4 * (2 * q * q + 1);

    if (method == Method::GS) {
        const auto e = log.run("blocks", [&] { return build_E_blocks(params, ctx); });
        const GroupCtx g = GroupCtx::from_field(GroupKind::FieldAdditive, ctx.field());
        log.run("verify-blocks", [&] {
            const auto r = verify_type_H(g, {e[0], e[1], e[2], e[3]});
            require(r, "type-H verification");
            return 0;
        });
        result.entry.family_verified = true;
        const SignMatrix h = log.run("assemble", [&] {
            std::array<SignMatrix, 4> mats = {
                block_to_sign_matrix(g, e[0]), block_to_sign_matrix(g, e[1]),
                block_to_sign_matrix(g, e[2]), block_to_sign_matrix(g, e[3])};
            return goethals_seidel({&mats[0], &mats[1], &mats[2], &mats[3]},
                                   inversion_perm(g));
        });
        log.run("verify-matrix", [&] {
            require(verify_hadamard(h), "hadamard verification");
            return 0;
        });
        result.entry.gs_verified = true;
        result.matrix_path = cache_dir / ("hadamard_q" + std::to_string(q) + "_gs.mat");
        write_text_file(result.matrix_path, matrix_to_string(h));
        return result;
    }

    const DiffFamily family = log.run("family", [&] { return build_family(ctx, params); });
    log.run("verify-family", [&] {
        require(verify_difference_family(family), "family verification");
        return 0;
    });
    result.entry.family_verified = true;

    FamilyFile ff;
    ff.p = static_cast<std::uint32_t>(ctx.field().p());
    ff.k = ctx.field().degree();
    ff.modulus = ctx.field().modulus();
    ff.family = family;
    result.family_path = cache_dir / ("family_q" + std::to_string(q) + ".df");
    write_text_file(result.family_path, family_to_string(ff));

    const auto cache_path = scheme_cache_path(cache_dir);
    std::vector<BorderScheme> schemes;
    if (std::filesystem::exists(cache_path)) {
        std::ifstream is(cache_path);
        schemes = read_schemes(is);
    }
    if (schemes.empty()) {
        if (q != 3)
            throw Error("calibration cache missing; run the calibrate command first");
        schemes = log.run("calibrate", [&] {
            return calibrate_border_scheme(family, {.stop_at_first = true});
        });
        std::ostringstream os;
        write_schemes(os, {schemes.front()});
        write_text_file(cache_path, os.str());
    }

    const SignMatrix h =
        log.run("assemble", [&] { return wallis_whiteman(family, schemes.front()); });
    log.run("verify-matrix", [&] {
        require(verify_hadamard(h), "hadamard verification");
        return 0;
    });
    result.entry.ww_verified = true;
    result.matrix_path = cache_dir / ("hadamard_q" + std::to_string(q) + "_ww.mat");
    write_text_file(result.matrix_path, matrix_to_string(h));
    return result;
}

} // namespace hforge
