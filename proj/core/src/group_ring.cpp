#include "hforge/group_ring.hpp"

#include <numeric>

namespace hforge {

GroupCtx::GroupCtx(GroupKind kind, std::uint32_t p, unsigned k)
    : kind_(kind), p_(p), k_(k) {
    std::uint64_t fo = 1;
    for (unsigned i = 0; i < k; ++i) fo *= p;
    field_order_ = static_cast<std::uint32_t>(fo);
    order_ = field_order_ * (kind == GroupKind::Z2TimesField ? 2 : 1);
}

std::uint32_t GroupCtx::add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t bit = 0;
    if (kind_ == GroupKind::Z2TimesField) {
        bit = (a / field_order_) ^ (b / field_order_);
        a %= field_order_;
        b %= field_order_;
    }
    std::uint32_t out = 0, mul = 1;
    for (unsigned i = 0; i < k_; ++i) {
        out += (a % p_ + b % p_) % p_ * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return bit * field_order_ + out;
}

std::uint32_t GroupCtx::sub(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t bit = 0;
    if (kind_ == GroupKind::Z2TimesField) {
        bit = (a / field_order_) ^ (b / field_order_);
        a %= field_order_;
        b %= field_order_;
    }
    std::uint32_t out = 0, mul = 1;
    for (unsigned i = 0; i < k_; ++i) {
        out += (a % p_ + p_ - b % p_) % p_ * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return bit * field_order_ + out;
}

std::uint32_t GroupCtx::neg(std::uint32_t a) const { return sub(0, a); }

std::int64_t GroupRingElem::total() const {
    return std::accumulate(coeffs.begin(), coeffs.end(), std::int64_t{0});
}

GroupRingElem from_block(const GroupCtx& ctx, const Block& b) {
    GroupRingElem e(ctx);
    for (auto g : b) e.coeffs[g] += 1;
    return e;
}

GroupRingElem whole_group(const GroupCtx& ctx) {
    GroupRingElem e(ctx);
    std::fill(e.coeffs.begin(), e.coeffs.end(), 1);
    return e;
}

GroupRingElem unit_element(const GroupCtx& ctx) {
    GroupRingElem e(ctx);
    e.coeffs[0] = 1;
    return e;
}

GroupRingElem difference_product(const GroupCtx& ctx, const Block& a, const Block& b) {
    GroupRingElem out(ctx);
    for (auto x : a)
        for (auto y : b) ++out.coeffs[ctx.sub(x, y)];
    return out;
}

GroupRingElem family_autocorrelation(const GroupCtx& ctx, const std::vector<Block>& blocks) {
    GroupRingElem out(ctx);
    for (const auto& blk : blocks) {
        const GroupRingElem dp = difference_product(ctx, blk, blk);
        for (std::size_t i = 0; i < out.coeffs.size(); ++i)
            out.coeffs[i] += dp.coeffs[i];
    }
    return out;
}

GroupRingElem linear_combination(
    const std::vector<std::pair<std::int64_t, const GroupRingElem*>>& terms) {
    if (terms.empty()) throw ContextMismatch("empty linear combination");
    GroupRingElem out(terms.front().second->ctx);
    for (const auto& [c, e] : terms) {
        if (!(e->ctx == out.ctx))
            throw ContextMismatch("linear combination over mixed group contexts");
        for (std::size_t i = 0; i < out.coeffs.size(); ++i)
            out.coeffs[i] += c * e->coeffs[i];
    }
    return out;
}

MatchResult equals(const GroupRingElem& a, const GroupRingElem& b) {
    if (!(a.ctx == b.ctx)) throw ContextMismatch("comparing over different groups");
    MatchResult r;
    for (std::uint32_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] != b.coeffs[i]) {
            r.equal = false;
            r.index = i;
            r.lhs = a.coeffs[i];
            r.rhs = b.coeffs[i];
            return r;
        }
    }
    return r;
}

} // namespace hforge
