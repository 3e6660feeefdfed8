#include "hforge/constructions.hpp"

#include <algorithm>
#include <set>

namespace hforge {

namespace {

bool is_prime_power(std::uint64_t n) {
    if (n < 2) return false;
    try {
        make_prime_power(n);
        return true;
    } catch (const NotAPrimePower&) {
        return false;
    }
}

std::uint64_t form_value(std::int64_t c) {
    return static_cast<std::uint64_t>(12 * c * c + 4 * c + 3);
}

Block sorted_unique(std::vector<std::uint32_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

std::vector<std::uint64_t> admissible_q_list(std::uint64_t max) {
    std::vector<std::uint64_t> out;
    for (int sign : {1, -1}) {
        for (std::int64_t i = (sign > 0) ? 0 : 1;; ++i) {
            const std::int64_t c = sign * i;
            const std::uint64_t v = form_value(c);
            if (v >= max) break;
            if (is_prime_power(v)) out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

QParams derive_params(const CycloCtx& ctx) {
    QParams params;
    params.q = ctx.q();
    const auto q = static_cast<std::int64_t>(params.q.value);
    if (q % 8 != 3)
        throw NotAdmissible("q is not 3 mod 8: " + std::to_string(q));

    bool found = false;
    for (std::int64_t c = 0; 12 * c * c - 4 * c + 3 <= q; ++c) {
        for (std::int64_t cc : {c, -c}) {
            if (static_cast<std::int64_t>(form_value(cc)) == q) {
                params.c = cc;
                found = true;
                break;
            }
        }
        if (found) break;
    }
    if (!found)
        throw NotAdmissible("q is not of the form 12c^2+4c+3: " + std::to_string(q));
    params.m = (q - 3) / 8;

    params.rep = fit_b_sign(ctx, solve_a_b(params.q));
    const std::int64_t a = params.rep.a;
    const std::int64_t b = *params.rep.b_signed;
    if (a != 4 * params.c * params.c + 12 * params.c + 1)
        throw ConditionConflict("a does not match 4c^2+12c+1");
    if (params.rep.b_abs != std::abs(8 * params.c * params.c - 2))
        throw ConditionConflict("|b| does not match |8c^2-2|");

    const bool cond_a = (3 * q == a + 4 * b + 16);
    const bool cond_b = (3 * q == a - 4 * b + 16);
    if (cond_a == cond_b)
        throw ConditionConflict("exactly one of 3q = a +- 4b + 16 must hold");
    if (cond_a) {
        params.I = {0, 2, 3};
        params.y = 3; // the unique odd element of I
    } else {
        params.I = {0, 2, 7};
        params.y = 7;
    }

    const auto qp1 = static_cast<std::uint32_t>(q + 1);
    for (std::int64_t i = 0; i < params.m; ++i) {
        params.J1.push_back(static_cast<std::uint32_t>((params.y + 2 + 4 * i) % qp1));
        params.J2.push_back(static_cast<std::uint32_t>((params.y + 4 * i) % qp1));
    }
    std::sort(params.J1.begin(), params.J1.end());
    std::sort(params.J2.begin(), params.J2.end());
    return params;
}

Block build_paley_pds(const CycloCtx& ctx, std::uint32_t i) {
    if (i >= 4) throw IndexOutOfRange("D index");
    return ctx.named_set(CycloCtx::NamedSet::D, i);
}

std::pair<Block, Block> build_B0_B1(const GroupCtx& z2ctx, const CycloCtx& ctx) {
    if (z2ctx.kind() != GroupKind::Z2TimesField ||
        z2ctx.field_order() != ctx.field().order())
        throw ContextMismatch("group context is not Z2 x F_{q^2}");
    const std::uint32_t fo = z2ctx.field_order();
    const Block d0 = build_paley_pds(ctx, 0);
    const Block d2 = build_paley_pds(ctx, 2);
    std::vector<char> in_d0(fo, 0);
    for (auto x : d0) in_d0[x] = 1;

    Block b0, b1;
    for (auto x : d0) b0.push_back(z2ctx.pair(0, x));
    for (Elem x = 0; x < fo; ++x)
        if (!in_d0[x]) b0.push_back(z2ctx.pair(1, x));
    for (auto x : d2) b1.push_back(z2ctx.pair(0, x));
    for (auto x : d2) b1.push_back(z2ctx.pair(1, x));
    return {sorted_unique(std::move(b0)), sorted_unique(std::move(b1))};
}

std::vector<Block> build_lms_blocks(const CycloCtx& ctx, const LmsSpec& spec) {
    const auto q = static_cast<std::uint32_t>(ctx.q().value);
    std::uint32_t e = 1;
    {
        std::uint32_t t = q + 1;
        while (t % 2 == 0) {
            t /= 2;
            e *= 2;
        }
    }
    if (spec.e != e)
        throw SpecViolation("e is not the exact power of 2 dividing q+1");
    if (spec.alpha % 2 == 0 || spec.alpha >= spec.e)
        throw SpecViolation("alpha must be odd and < e");
    const std::uint64_t num = std::uint64_t{q} * spec.e - std::uint64_t{spec.alpha} * (q + 1);
    if (num % (2 * spec.e) != 0 || spec.beta != num / (2 * spec.e))
        throw SpecViolation("beta != (qe - alpha(q+1)) / (2e)");
    if (spec.A.size() != spec.alpha)
        throw SpecViolation("|A| != alpha");
    for (auto a : spec.A)
        if (a >= 2 * spec.e) throw SpecViolation("A element out of {0..2e-1}");
    if (spec.B_sets.size() != spec.e)
        throw SpecViolation("need exactly e B-sets");
    for (const auto& bs : spec.B_sets) {
        if (bs.size() != spec.beta) throw SpecViolation("|B_r| != beta");
        for (auto b : bs) {
            if (b > q) throw SpecViolation("B element out of {0..q}");
            for (auto a : spec.A)
                if (b % spec.e == a % spec.e)
                    throw SpecViolation("b = a (mod e) for a in A, b in B_r");
        }
    }

    std::vector<std::uint32_t> h_union;
    for (auto i : spec.A) {
        const Block c = ctx.cyclotomic_class(2 * spec.e, i);
        h_union.insert(h_union.end(), c.begin(), c.end());
    }
    const FieldCtx& f = ctx.field();
    std::vector<Block> out;
    for (std::uint32_t i = 0; i < spec.e; ++i) {
        std::vector<std::uint32_t> base = h_union;
        for (auto j : spec.B_sets[i]) {
            const Block l = ctx.named_set(CycloCtx::NamedSet::L, j);
            base.insert(base.end(), l.begin(), l.end());
        }
        const Elem wi = f.pow(f.omega(), i);
        for (auto& x : base) x = f.mul(wi, x);
        out.push_back(sorted_unique(std::move(base)));
    }
    return out;
}

std::array<Block, 4> build_E_blocks(const QParams& params, const CycloCtx& ctx) {
    const auto q = static_cast<std::uint32_t>(params.q.value);
    auto make = [&](int class_shift, const std::vector<std::uint32_t>& J,
                    std::uint32_t line_shift) {
        std::vector<std::uint32_t> acc;
        for (int i : params.I) {
            const Block c = ctx.cyclotomic_class(
                8, static_cast<std::uint32_t>((i + class_shift) % 8));
            acc.insert(acc.end(), c.begin(), c.end());
        }
        for (auto j : J) {
            const Block l = ctx.named_set(CycloCtx::NamedSet::L, (j + line_shift) % (q + 1));
            acc.insert(acc.end(), l.begin(), l.end());
        }
        return sorted_unique(std::move(acc));
    };
    return {make(0, params.J1, 0), make(2, params.J2, 0), make(1, params.J1, 1),
            make(3, params.J2, 1)};
}

DiffFamily build_family(const CycloCtx& ctx, const QParams& params) {
    const GroupCtx z2ctx = GroupCtx::from_field(GroupKind::Z2TimesField, ctx.field());
    const std::uint32_t fo = z2ctx.field_order();

    auto [b0, b1] = build_B0_B1(z2ctx, ctx);
    const auto e = build_E_blocks(params, ctx);

    auto lift = [&](const Block& zero_fiber, const Block& one_fiber_complement) {
        std::vector<char> excl(fo, 0);
        for (auto x : one_fiber_complement) excl[x] = 1;
        Block out;
        for (auto x : zero_fiber) out.push_back(z2ctx.pair(0, x));
        for (Elem x = 0; x < fo; ++x)
            if (!excl[x]) out.push_back(z2ctx.pair(1, x));
        return sorted_unique(std::move(out));
    };
    const Block b2 = lift(e[0], e[1]);
    const Block b3 = lift(e[2], e[3]);

    DiffFamily fam(z2ctx);
    fam.blocks = {b0, b1, b2, b3};
    fam.declared_sizes = {fo, fo - 1, fo, fo};
    fam.declared_lambda = 2 * std::int64_t{fo} - 2;
    return fam;
}

SectionConditions check_section_conditions(const QParams& params) {
    const auto q = static_cast<std::uint32_t>(params.q.value);
    const std::uint32_t qp1 = q + 1;
    const std::uint32_t period = 2 * qp1;
    const std::int64_t m = params.m;

    std::set<std::uint32_t> i1, i2;
    for (int x : params.I)
        for (std::int64_t i = 0; i <= 2 * m; ++i) {
            i1.insert(static_cast<std::uint32_t>((x + 8 * i) % period));
            i2.insert(static_cast<std::uint32_t>((x + 2 + 8 * i) % period));
        }
    std::set<std::uint32_t> i1p, i2p; // reductions mod q+1
    for (auto x : i1) i1p.insert(x % qp1);
    for (auto x : i2) i2p.insert(x % qp1);

    SectionConditions c;
    c.no_halfturn_overlap = true;
    for (const auto* s : {&i1, &i2})
        for (auto x : *s)
            if (s->count((x + qp1) % period)) c.no_halfturn_overlap = false;

    c.index_classes_disjoint = true;
    const std::set<std::uint32_t> j1(params.J1.begin(), params.J1.end());
    const std::set<std::uint32_t> j2(params.J2.begin(), params.J2.end());
    for (auto a : i1)
        if (j1.count(a % qp1)) c.index_classes_disjoint = false;
    for (auto a : i2)
        if (j2.count(a % qp1)) c.index_classes_disjoint = false;

    c.size_identity = (i1.size() + 2 * j1.size() == q) && (i2.size() + 2 * j2.size() == q);

    c.j_containment = true;
    for (auto x : j1)
        if (!i2p.count(x) && !j2.count(x)) c.j_containment = false;
    for (auto x : j2)
        if (!i1p.count(x) && !j1.count(x)) c.j_containment = false;
    return c;
}

} // namespace hforge
