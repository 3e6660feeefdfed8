// hforge command line: difference families in Z2 x GF(q^2) for
// q = 12c^2 + 4c + 3 and the Hadamard matrices assembled from them.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hforge/assembly.hpp"
#include "hforge/catalog.hpp"
#include "hforge/constructions.hpp"
#include "hforge/io.hpp"
#include "hforge/verify.hpp"

namespace {

using namespace hforge;

struct GlobalOpts {
    std::string cache_dir;
    bool machine = false;
};

void print_table(const CycloTable& t, const std::string& prefix, bool machine) {
    for (std::uint32_t i = 0; i < t.order; ++i) {
        if (!machine) std::cout << prefix << " ";
        for (std::uint32_t j = 0; j < t.order; ++j) {
            if (j) std::cout << " ";
            std::cout << t.at(i, j);
        }
        std::cout << "\n";
    }
}

int report_exit(const VerifyReport& r) {
    std::cout << r.to_string() << "\n";
    return r.passed ? 0 : 1;
}

int cmd_list_q(std::uint64_t max) {
    for (auto q : admissible_q_list(max)) std::cout << q << "\n";
    return 0;
}

int cmd_params(std::uint64_t q, const GlobalOpts& g) {
    const CycloCtx ctx = CycloCtx::build(make_prime_power(q));
    const QParams p = derive_params(ctx);
    auto join = [](const auto& v) {
        std::string s;
        for (auto x : v) {
            if (!s.empty()) s += ",";
            s += std::to_string(x);
        }
        return s.empty() ? std::string{"-"} : s;
    };
    if (g.machine) {
        std::cout << "q=" << q << " c=" << p.c << " m=" << p.m << " a=" << p.rep.a
                  << " b=" << *p.rep.b_signed << " I=" << join(p.I) << " y=" << p.y
                  << " J1=" << join(p.J1) << " J2=" << join(p.J2) << "\n";
    } else {
        std::cout << "q = " << q << "  (" << ctx.field().header() << ")\n"
                  << "c = " << p.c << ", m = " << p.m << "\n"
                  << "a = " << p.rep.a << ", b = " << *p.rep.b_signed
                  << "  (q^2 = a^2 + 2b^2, sign fitted to the presentation)\n"
                  << "I = {" << join(p.I) << "}, y = " << p.y << "\n"
                  << "J1 = {" << join(p.J1) << "}, J2 = {" << join(p.J2) << "}\n";
    }
    return 0;
}

int cmd_build_family(std::uint64_t q, const GlobalOpts& g) {
    const CycloCtx ctx = CycloCtx::build(make_prime_power(q));
    const QParams p = derive_params(ctx);
    const DiffFamily fam = build_family(ctx, p);
    FamilyFile ff;
    ff.p = static_cast<std::uint32_t>(ctx.field().p());
    ff.k = ctx.field().degree();
    ff.modulus = ctx.field().modulus();
    ff.family = fam;
    const auto dir = resolve_cache_dir(g.cache_dir);
    std::filesystem::create_directories(dir);
    const auto path = dir / ("family_q" + std::to_string(q) + ".df");
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    write_family(os, ff);
    std::cout << (g.machine ? "file=" : "wrote ") << path.string() << "\n";
    return 0;
}

int cmd_verify_family(const std::string& file) {
    std::ifstream is(file);
    if (!is) {
        std::cerr << "cannot open " << file << "\n";
        return 2;
    }
    const FamilyFile ff = read_family(is);
    return report_exit(verify_difference_family(ff.family));
}

int cmd_verify_hadamard(const std::string& file) {
    std::ifstream is(file);
    if (!is) {
        std::cerr << "cannot open " << file << "\n";
        return 2;
    }
    const SignMatrix m = read_matrix(is);
    return report_exit(verify_hadamard(m));
}

int cmd_build_hadamard(std::uint64_t q, const std::string& method, const GlobalOpts& g) {
    const Method m = (method == "gs") ? Method::GS : Method::WW;
    const PipelineResult r = run_pipeline(q, m, resolve_cache_dir(g.cache_dir));
    for (const auto& line : r.log) {
        if (g.machine)
            std::cout << line << "\n";
        else
            std::cout << "  " << line << "\n";
    }
    std::cout << (g.machine ? "file=" : "wrote ") << r.matrix_path.string() << "\n";
    return 0;
}

int cmd_cyclo(std::uint64_t q, const GlobalOpts& g) {
    const CycloCtx ctx = CycloCtx::build(make_prime_power(q));
    const CycloTable brute = cyclotomic_numbers_bruteforce(ctx, 8);
    const TwoSquareRep rep = fit_b_sign(ctx, solve_a_b(ctx.q()));
    const CycloTable formula = cyclotomic_numbers_formula(ctx.q(), rep);
    if (g.machine) {
        std::cout << "a=" << rep.a << " b=" << *rep.b_signed << "\n";
        print_table(brute, "", true);
        print_table(formula, "", true);
    } else {
        std::cout << ctx.field().header() << "\n"
                  << "fitted a = " << rep.a << ", b = " << *rep.b_signed << "\n"
                  << "brute-force (i,j)_8:\n";
        print_table(brute, " ", false);
        std::cout << "closed form:\n";
        print_table(formula, " ", false);
        std::cout << (brute == formula ? "tables agree\n" : "TABLES DISAGREE\n");
    }
    return brute == formula ? 0 : 1;
}

int cmd_sieve(std::uint64_t max, const GlobalOpts& g) {
    const SieveCounts c = sieve_counts(max);
    if (g.machine)
        std::cout << "count_form=" << c.count_form << " count_3mod8=" << c.count_3mod8
                  << "\n";
    else
        std::cout << "prime powers of the form 12c^2+4c+3 below " << max << ": "
                  << c.count_form << "\n"
                  << "prime powers = 3 (mod 8) below " << max << ": " << c.count_3mod8
                  << "\n";
    return 0;
}

int cmd_conjecture(std::uint64_t max, const GlobalOpts& g) {
    const auto hits = conjecture_scan(max);
    if (g.machine) {
        std::cout << "hits=" << hits.size() << "\n";
        for (auto h : hits) std::cout << h << "\n";
    } else if (hits.empty()) {
        std::cout << "no proper prime powers of the form 12c^2+4c+3 below " << max
                  << "\n";
    } else {
        for (auto h : hits) std::cout << h << "\n";
    }
    return 0;
}

int cmd_calibrate(const GlobalOpts& g) {
    const CycloCtx ctx = CycloCtx::build(make_prime_power(3));
    const DiffFamily fam = build_family(ctx, derive_params(ctx));
    const auto schemes = calibrate_border_scheme(fam);
    const auto dir = resolve_cache_dir(g.cache_dir);
    std::filesystem::create_directories(dir);
    const auto path = scheme_cache_path(dir);
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    write_schemes(os, {schemes.front()});
    if (g.machine)
        std::cout << "schemes=" << schemes.size() << " file=" << path.string() << "\n";
    else
        std::cout << schemes.size() << " passing schemes; cached the first to "
                  << path.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Difference families and Hadamard matrices from 8th cyclotomic "
                 "classes of GF(q^2), q = 12c^2+4c+3"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--cache", g.cache_dir, "Cache directory (default $HFORGE_CACHE or .hforge)");
    app.add_flag("--machine", g.machine, "Machine-readable key=value output");

    std::uint64_t max = 0, q = 0;
    std::string file, method = "ww";

    auto* list = app.add_subcommand("list-q", "Admissible prime powers below a bound");
    list->add_option("--max", max, "Exclusive upper bound")->required();

    auto* params = app.add_subcommand("params", "Derived parameters for one q");
    params->add_option("q", q, "Admissible prime power")->required();

    auto* bf = app.add_subcommand("build-family", "Build and write the difference family");
    bf->add_option("q", q, "Admissible prime power")->required();

    auto* vf = app.add_subcommand("verify-family", "Verify a family file");
    vf->add_option("file", file, "Family file")->required();

    auto* bh = app.add_subcommand("build-hadamard", "Run the full pipeline to a matrix file");
    bh->add_option("q", q, "Admissible prime power")->required();
    bh->add_option("--method", method, "gs (order 4q^2) or ww (order 4(2q^2+1))")
        ->check(CLI::IsMember({"gs", "ww"}));

    auto* vh = app.add_subcommand("verify-hadamard", "Verify a matrix file");
    vh->add_option("file", file, "Matrix file")->required();

    auto* cy = app.add_subcommand("cyclo", "Order-8 cyclotomic numbers, brute force vs closed form");
    cy->add_option("q", q, "Prime power = 3 (mod 8)")->required();

    auto* sv = app.add_subcommand("sieve", "Count admissible q and prime powers = 3 (mod 8)");
    sv->add_option("--max", max, "Exclusive upper bound")->required();

    auto* cj = app.add_subcommand("conjecture-scan", "Scan for proper prime powers of the form");
    cj->add_option("--max", max, "Exclusive upper bound")->required();

    app.add_subcommand("calibrate", "Search border schemes at q=3 and cache the first");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) return cmd_list_q(max);
        if (params->parsed()) return cmd_params(q, g);
        if (bf->parsed()) return cmd_build_family(q, g);
        if (vf->parsed()) return cmd_verify_family(file);
        if (bh->parsed()) return cmd_build_hadamard(q, method, g);
        if (vh->parsed()) return cmd_verify_hadamard(file);
        if (cy->parsed()) return cmd_cyclo(q, g);
        if (sv->parsed()) return cmd_sieve(max, g);
        if (cj->parsed()) return cmd_conjecture(max, g);
        return cmd_calibrate(g);
    } catch (const hforge::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
