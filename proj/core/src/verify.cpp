#include "hforge/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace hforge {

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

VerifyReport finish(std::string subject, bool passed, std::string details,
                    const Timer& t) {
    VerifyReport r;
    r.subject = std::move(subject);
    r.passed = passed;
    r.details = passed ? std::string{} : std::move(details);
    r.ms = t.ms();
    return r;
}

std::string mismatch_detail(const MatchResult& m) {
    std::ostringstream os;
    os << "element " << m.index << " has coefficient " << m.lhs << ", expected "
       << m.rhs;
    return os.str();
}

} // namespace

std::string VerifyReport::to_string() const {
    std::ostringstream os;
    os << (passed ? "PASS" : "FAIL") << " subject=" << subject
       << " detail=" << (details.empty() ? "-" : details) << " ms=" << std::llround(ms);
    return os.str();
}

VerifyReport verify_difference_family(const DiffFamily& family) {
    Timer t;
    std::ostringstream subject;
    subject << "difference-family v=" << family.ctx.order()
            << " lambda=" << family.declared_lambda;

    if (family.blocks.size() != family.declared_sizes.size())
        return finish(subject.str(), false, "block count mismatch", t);
    for (std::size_t i = 0; i < family.blocks.size(); ++i)
        if (family.blocks[i].size() != family.declared_sizes[i])
            return finish(subject.str(), false,
                          "block " + std::to_string(i) + " has size " +
                              std::to_string(family.blocks[i].size()) + ", declared " +
                              std::to_string(family.declared_sizes[i]),
                          t);

    const GroupRingElem autoc = family_autocorrelation(family.ctx, family.blocks);
    std::int64_t total_k = 0;
    for (const auto& b : family.blocks) total_k += static_cast<std::int64_t>(b.size());

    const GroupRingElem g = whole_group(family.ctx);
    const GroupRingElem zero = unit_element(family.ctx);
    const GroupRingElem expect = linear_combination(
        {{family.declared_lambda, &g}, {total_k - family.declared_lambda, &zero}});
    const MatchResult m = equals(autoc, expect);
    return finish(subject.str(), m.equal, mismatch_detail(m), t);
}

VerifyReport verify_pds(const GroupCtx& ctx, const Block& d) {
    Timer t;
    const std::string subject = "paley-pds |D|=" + std::to_string(d.size());
    if (ctx.kind() != GroupKind::FieldAdditive)
        return finish(subject, false, "context is not a field additive group", t);
    for (auto x : d)
        if (x == 0) return finish(subject, false, "0 must not lie in D", t);

    const std::int64_t q2 = ctx.order();
    GroupRingElem ind_d = from_block(ctx, d);
    GroupRingElem dbar(ctx); // complement of D in G*
    for (std::uint32_t x = 1; x < ctx.order(); ++x)
        dbar.coeffs[x] = 1 - ind_d.coeffs[x];
    const GroupRingElem zero = unit_element(ctx);

    const GroupRingElem lhs = difference_product(ctx, d, d);
    const GroupRingElem rhs = linear_combination({{(q2 - 5) / 4, &ind_d},
                                                  {(q2 - 1) / 4, &dbar},
                                                  {(q2 - 1) / 2, &zero}});
    const MatchResult m = equals(lhs, rhs);
    return finish(subject, m.equal, mismatch_detail(m), t);
}

VerifyReport verify_type_H(const GroupCtx& ctx, const std::vector<Block>& blocks) {
    Timer t;
    const std::string subject = "type-H |G|=" + std::to_string(ctx.order());
    if (blocks.size() != 4)
        return finish(subject, false, "type H needs exactly four blocks", t);
    std::int64_t total_k = 0;
    for (const auto& b : blocks) total_k += static_cast<std::int64_t>(b.size());
    const std::int64_t lambda = total_k - ctx.order();
    if (lambda < 0)
        return finish(subject, false, "sum of sizes below |G|", t);

    const GroupRingElem autoc = family_autocorrelation(ctx, blocks);
    const GroupRingElem g = whole_group(ctx);
    const GroupRingElem zero = unit_element(ctx);
    const GroupRingElem expect =
        linear_combination({{lambda, &g}, {total_k - lambda, &zero}});
    const MatchResult m = equals(autoc, expect);
    return finish(subject + " lambda=" + std::to_string(lambda), m.equal,
                  mismatch_detail(m), t);
}

VerifyReport verify_cross_condition(const CycloCtx& ctx, const std::array<Block, 4>& e) {
    Timer t;
    const auto q = static_cast<std::int64_t>(ctx.q().value);
    const std::string subject = "cross-condition q=" + std::to_string(q);
    const GroupCtx g = GroupCtx::from_field(GroupKind::FieldAdditive, ctx.field());

    GroupRingElem lhs(g);
    for (auto [i, j] : {std::pair{0, 1}, {1, 0}, {2, 3}, {3, 2}}) {
        const GroupRingElem dp = difference_product(g, e[i], e[j]);
        for (std::size_t x = 0; x < lhs.coeffs.size(); ++x)
            lhs.coeffs[x] += dp.coeffs[x];
    }

    const GroupRingElem whole = whole_group(g);
    const GroupRingElem d0 = from_block(g, ctx.named_set(CycloCtx::NamedSet::D, 0));
    const GroupRingElem d2 = from_block(g, ctx.named_set(CycloCtx::NamedSet::D, 2));
    const GroupRingElem rhs =
        linear_combination({{(q - 1) * (q - 1), &whole}, {2, &d0}, {-2, &d2}});
    const MatchResult m = equals(lhs, rhs);
    return finish(subject, m.equal, mismatch_detail(m), t);
}

VerifyReport verify_lemma_3_3(const CycloCtx& ctx, const std::array<Block, 4>& e,
                              const QParams& params) {
    Timer t;
    const std::string subject = "class-cross-identity q=" + std::to_string(params.q.value);
    const GroupCtx g = GroupCtx::from_field(GroupKind::FieldAdditive, ctx.field());

    GroupRingElem lhs(g);
    for (auto [i, j] : {std::pair{0, 1}, {1, 0}, {2, 3}, {3, 2}}) {
        const GroupRingElem dp = difference_product(g, e[i], e[j]);
        for (std::size_t x = 0; x < lhs.coeffs.size(); ++x)
            lhs.coeffs[x] += dp.coeffs[x];
    }
    for (int h = 0; h <= 1; ++h) {
        for (int i : params.I) {
            for (int j : params.I) {
                for (auto [u, v] : {std::pair{i + h, j + 2 + h}, {i + 2 + h, j + h}}) {
                    const Block cu = ctx.cyclotomic_class(8, static_cast<std::uint32_t>(u % 8));
                    const Block cv = ctx.cyclotomic_class(8, static_cast<std::uint32_t>(v % 8));
                    const GroupRingElem dp = difference_product(g, cu, cv);
                    for (std::size_t x = 0; x < lhs.coeffs.size(); ++x)
                        lhs.coeffs[x] -= dp.coeffs[x];
                }
            }
        }
    }

    const std::int64_t m = params.m;
    GroupRingElem rhs(g);
    rhs.coeffs[0] = 8 * m * (4 * m + 1);
    for (std::size_t x = 1; x < rhs.coeffs.size(); ++x) rhs.coeffs[x] = m * (28 * m + 5);
    const MatchResult res = equals(lhs, rhs);
    return finish(subject, res.equal, mismatch_detail(res), t);
}

VerifyReport verify_hadamard(const SignMatrix& mat) {
    Timer t;
    const std::string subject = "hadamard order=" + std::to_string(mat.order());
    for (std::uint32_t i = 0; i < mat.order(); ++i) {
        for (std::uint32_t j = i + 1; j < mat.order(); ++j) {
            const std::int64_t dot = mat.row_dot(i, j);
            if (dot != 0) {
                std::ostringstream os;
                os << "rows " << i << " and " << j << " have dot product " << dot;
                return finish(subject, false, os.str(), t);
            }
        }
    }
    return finish(subject, true, {}, t);
}

} // namespace hforge
