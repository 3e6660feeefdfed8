#include "hforge/cyclotomy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hforge {

CycloCtx CycloCtx::build(const PrimePower& q) {
    return CycloCtx(FieldCtx::build(q.p, 2 * q.s), q);
}

CycloCtx::CycloCtx(FieldCtx field, PrimePower q) : field_(std::move(field)), q_(q) {
    if (std::uint64_t{field_.order()} != q.value * q.value)
        throw ContextMismatch("field order is not q^2");
}

std::uint32_t CycloCtx::class_index(Elem x, std::uint32_t N) const {
    return field_.log(x) % N;
}

Block CycloCtx::cyclotomic_class(std::uint32_t N, std::uint32_t i) const {
    const std::uint32_t n = field_.order() - 1;
    if (N == 0 || n % N != 0)
        throw BadModulus("N does not divide q^2-1: " + std::to_string(N));
    Block out;
    out.reserve(n / N);
    for (std::uint32_t j = i % N; j < n; j += N) out.push_back(field_.antilog(j));
    std::sort(out.begin(), out.end());
    return out;
}

Block CycloCtx::named_set(NamedSet kind, std::uint32_t i) const {
    const std::uint32_t q = q_value();
    switch (kind) {
        case NamedSet::H:
            if (i >= 2 * (q + 1)) throw IndexOutOfRange("H index");
            return cyclotomic_class(2 * (q + 1), i);
        case NamedSet::L:
            if (i >= q + 1) throw IndexOutOfRange("L index");
            return cyclotomic_class(q + 1, i);
        case NamedSet::S: {
            if (i >= q + 1) throw IndexOutOfRange("S index");
            Block out = cyclotomic_class(q + 1, i);
            out.insert(out.begin(), 0);
            return out;
        }
        case NamedSet::D: {
            if (i >= 4) throw IndexOutOfRange("D index");
            Block a = cyclotomic_class(4, i);
            Block b = cyclotomic_class(4, (i + 1) % 4);
            Block out;
            out.reserve(a.size() + b.size());
            std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
            return out;
        }
    }
    throw IndexOutOfRange("bad named set kind");
}

std::int64_t CycloTable::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

CycloTable cyclotomic_numbers_bruteforce(const CycloCtx& ctx, std::uint32_t N) {
    const FieldCtx& f = ctx.field();
    const std::uint32_t n = f.order() - 1;
    if (N == 0 || n % N != 0)
        throw BadModulus("N does not divide q^2-1: " + std::to_string(N));
    CycloTable t;
    t.order = N;
    t.counts.assign(std::size_t{N} * N, 0);
    for (Elem x = 1; x < f.order(); ++x) {
        const Elem x1 = f.add(x, 1);
        if (x1 == 0) continue;
        ++t.at(f.log(x) % N, f.log(x1) % N);
    }
    return t;
}

TwoSquareRep solve_a_b(const PrimePower& q) {
    const std::int64_t q2 = static_cast<std::int64_t>(q.value * q.value);
    for (std::int64_t b = 1; 2 * b * b < q2; ++b) {
        const std::int64_t a2 = q2 - 2 * b * b;
        const auto a = static_cast<std::int64_t>(std::llround(std::sqrt(double(a2))));
        for (std::int64_t aa = std::max<std::int64_t>(1, a - 1); aa <= a + 1; ++aa) {
            if (aa * aa == a2 && std::gcd(aa, b) == 1) {
                TwoSquareRep rep;
                rep.a = (aa % 4 == 1) ? aa : -aa;
                rep.b_abs = b;
                return rep;
            }
        }
    }
    throw NoRepresentation("no proper representation q^2 = a^2 + 2b^2 for q=" +
                           std::to_string(q.value));
}

const std::array<std::array<int, 8>, 8> kCycloPattern8 = {{
    {1, 2, 3, 2, 4, 2, 3, 2},
    {5, 5, 6, 2, 2, 2, 2, 7},
    {8, 2, 8, 7, 3, 2, 3, 6},
    {5, 2, 2, 5, 2, 7, 6, 2},
    {1, 5, 8, 5, 1, 5, 8, 5},
    {5, 2, 7, 6, 2, 5, 2, 2},
    {8, 7, 3, 2, 3, 6, 8, 2},
    {5, 6, 2, 2, 2, 2, 7, 5},
}};

std::array<std::int64_t, 9> cyclotomic_n_values(const PrimePower& q,
                                                std::int64_t a, std::int64_t b) {
    const std::int64_t q2 = static_cast<std::int64_t>(q.value * q.value);
    const auto qq = static_cast<std::int64_t>(q.value);
    const std::array<std::int64_t, 9> raw = {
        0,
        q2 - 15 + 2 * qq,
        q2 + 1 - 2 * qq - 4 * a,
        q2 + 1 - 6 * qq + 8 * a,
        q2 + 1 + 18 * qq,
        q2 - 7 - 2 * qq + 4 * a,
        q2 + 1 + 6 * qq + 4 * a + 16 * b,
        q2 + 1 + 6 * qq + 4 * a - 16 * b,
        q2 - 7 + 2 * qq - 8 * a,
    };
    std::array<std::int64_t, 9> n{};
    for (int i = 1; i <= 8; ++i) {
        if (raw[i] % 64 != 0)
            throw NonIntegerCount("64 n_" + std::to_string(i) +
                                  " relation not divisible by 64");
        n[i] = raw[i] / 64;
    }
    return n;
}

CycloTable cyclotomic_numbers_formula(const PrimePower& q, const TwoSquareRep& rep) {
    if (!rep.b_signed)
        throw FitFailure("b_signed is unset; run fit_b_sign first");
    const auto n = cyclotomic_n_values(q, rep.a, *rep.b_signed);
    CycloTable t;
    t.order = 8;
    t.counts.assign(64, 0);
    for (std::uint32_t i = 0; i < 8; ++i)
        for (std::uint32_t j = 0; j < 8; ++j)
            t.at(i, j) = n[kCycloPattern8[i][j]];
    return t;
}

TwoSquareRep fit_b_sign(const CycloCtx& ctx, TwoSquareRep rep) {
    const CycloTable brute = cyclotomic_numbers_bruteforce(ctx, 8);
    int matches = 0;
    for (const std::int64_t b : {rep.b_abs, -rep.b_abs}) {
        TwoSquareRep cand = rep;
        cand.b_signed = b;
        try {
            if (cyclotomic_numbers_formula(ctx.q(), cand) == brute) {
                rep.b_signed = b;
                ++matches;
            }
        } catch (const NonIntegerCount&) {
        }
    }
    if (matches != 1)
        throw FitFailure("sign of b fits " + std::to_string(matches) +
                         " ways for q=" + std::to_string(ctx.q().value));
    return rep;
}

std::array<std::int64_t, 4> compute_N1_to_N4(const CycloCtx& ctx,
                                             const std::array<int, 3>& I) {
    const FieldCtx& f = ctx.field();
    std::vector<char> inD(f.order(), 0);
    for (int i : I)
        for (Elem x : ctx.cyclotomic_class(8, static_cast<std::uint32_t>(i)))
            inD[x] = 1;
    const std::uint32_t n = f.order() - 1;
    auto wpow = [&](std::int64_t e) {
        std::int64_t r = e % n;
        if (r < 0) r += n;
        return f.antilog(static_cast<std::uint32_t>(r));
    };
    // |w^g1 D  intersect  (w^g2 D + 1)|
    auto count = [&](std::int64_t g1, std::int64_t g2) {
        const Elem u = wpow(g1), v = wpow(g2);
        std::int64_t c = 0;
        for (Elem x = 1; x < f.order(); ++x) {
            if (!inD[x]) continue;
            const Elem lhs = f.mul(v, x);       // element of w^g2 D
            const Elem y = f.add(lhs, 1);       // shifted
            if (y == 0) continue;
            // y in w^g1 D  <=>  y / w^g1 in D
            const Elem z = f.mul(y, f.inv(u));
            if (inD[z]) ++c;
        }
        return c;
    };
    const std::int64_t N1 = count(1, 3) + count(3, 1);
    const std::int64_t N2 = count(-1, 1) + count(1, -1);
    const std::int64_t N3 = count(0, 2) + count(2, 0);
    const std::int64_t N4 = count(-2, 0) + count(0, -2);
    return {N1, N2, N3, N4};
}

std::pair<std::int64_t, std::int64_t> closed_form_N3_N4(const PrimePower& q,
                                                        std::int64_t a,
                                                        std::int64_t b_eff) {
    const std::int64_t q2 = static_cast<std::int64_t>(q.value * q.value);
    const auto qq = static_cast<std::int64_t>(q.value);
    const std::int64_t n3 = 18 * q2 + 28 * qq - 8 * a - 32 * b_eff - 46;
    const std::int64_t n4 = 18 * q2 - 20 * qq + 8 * a + 32 * b_eff - 46;
    if (n3 % 64 != 0 || n4 % 64 != 0)
        throw NonIntegerCount("N3/N4 closed form not divisible by 64");
    return {n3 / 64, n4 / 64};
}

} // namespace hforge
