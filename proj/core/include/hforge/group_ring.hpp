#pragma once

#include <cstdint>
#include <vector>

#include "hforge/cyclotomy.hpp"
#include "hforge/field.hpp"

namespace hforge {

enum class GroupKind { FieldAdditive, Z2TimesField };

/// Additive group (F_{q^2},+) or Z_2 x (F_{q^2},+), element indices in the
/// canonical encoding: field elements directly, pairs as bit * q^2 + elem.
/// Self-contained (keeps only p and the degree), so contexts are cheap values.
class GroupCtx {
public:
    GroupCtx(GroupKind kind, std::uint32_t p, unsigned k);
    static GroupCtx from_field(GroupKind kind, const FieldCtx& f) {
        return GroupCtx(kind, static_cast<std::uint32_t>(f.p()), f.degree());
    }

    GroupKind kind() const { return kind_; }
    std::uint32_t p() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint32_t field_order() const { return field_order_; }
    std::uint32_t order() const { return order_; }
    std::uint32_t zero() const { return 0; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;

    std::uint32_t pair(std::uint32_t bit, Elem x) const { return bit * field_order_ + x; }

    bool operator==(const GroupCtx&) const = default;

private:
    GroupKind kind_;
    std::uint32_t p_;
    unsigned k_;
    std::uint32_t field_order_;
    std::uint32_t order_;
};

struct GroupRingElem {
    GroupCtx ctx;
    std::vector<std::int64_t> coeffs;

    explicit GroupRingElem(const GroupCtx& c) : ctx(c), coeffs(c.order(), 0) {}
    std::int64_t total() const;
};

GroupRingElem from_block(const GroupCtx& ctx, const Block& b);
GroupRingElem whole_group(const GroupCtx& ctx);
GroupRingElem unit_element(const GroupCtx& ctx); // indicator of 0_G

/// A * B^{(-1)}: coeffs[g] = #{(a,b) in A x B : a - b = g}.
GroupRingElem difference_product(const GroupCtx& ctx, const Block& a, const Block& b);

/// Sum of B_i B_i^{(-1)} over the blocks.
GroupRingElem family_autocorrelation(const GroupCtx& ctx, const std::vector<Block>& blocks);

/// Componentwise integer combination of group ring elements.
GroupRingElem linear_combination(
    const std::vector<std::pair<std::int64_t, const GroupRingElem*>>& terms);

struct MatchResult {
    bool equal = true;
    std::uint32_t index = 0; // least mismatching element when !equal
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
};

MatchResult equals(const GroupRingElem& a, const GroupRingElem& b);

} // namespace hforge
