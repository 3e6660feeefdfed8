#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hforge/field.hpp"

namespace hforge {

/// Sorted, duplicate-free set of field elements (or, in group_ring, of group
/// element indices).
using Block = std::vector<std::uint32_t>;

/// Cyclotomic classes of F_{q^2} and the named set families built from them.
/// Immutable after construction; all queries go through the field's log table.
class CycloCtx {
public:
    /// Canonical context for an admissible q: builds GF(p^{2s}) in the fixed
    /// deterministic presentation.
    static CycloCtx build(const PrimePower& q);

    CycloCtx(FieldCtx field, PrimePower q);

    const FieldCtx& field() const { return field_; }
    const PrimePower& q() const { return q_; }
    std::uint32_t q_value() const { return static_cast<std::uint32_t>(q_.value); }

    /// Index i with x in C_i^{(N,q^2)}, i.e. log(x) mod N.
    std::uint32_t class_index(Elem x, std::uint32_t N) const;

    /// C_i^{(N,q^2)} = omega^i <omega^N>; throws BadModulus when N does not
    /// divide q^2 - 1.
    Block cyclotomic_class(std::uint32_t N, std::uint32_t i) const;

    enum class NamedSet { H, L, S, D };

    /// H_i = C_i^{(2(q+1))}, L_i = C_i^{(q+1)}, S_i = L_i + {0},
    /// D_i = C_i^{(4)} + C_{i+1}^{(4)}.
    Block named_set(NamedSet kind, std::uint32_t i) const;

private:
    FieldCtx field_;
    PrimePower q_;
};

struct CycloTable {
    std::uint32_t order = 0;
    std::vector<std::int64_t> counts; // order x order, row major

    std::int64_t at(std::uint32_t i, std::uint32_t j) const {
        return counts[std::size_t{i} * order + j];
    }
    std::int64_t& at(std::uint32_t i, std::uint32_t j) {
        return counts[std::size_t{i} * order + j];
    }
    std::int64_t total() const;
    bool operator==(const CycloTable&) const = default;
};

struct TwoSquareRep {
    std::int64_t a = 0;
    std::int64_t b_abs = 0;
    std::optional<std::int64_t> b_signed;
};

/// (i,j)_N by a single pass over the nonzero elements with x + 1 != 0.
CycloTable cyclotomic_numbers_bruteforce(const CycloCtx& ctx, std::uint32_t N);

/// The unique proper representation q^2 = a^2 + 2 b^2 with a = 1 (mod 4),
/// found by exhaustive scan over b. The sign of b is left unset.
TwoSquareRep solve_a_b(const PrimePower& q);

/// The eight counts n_1..n_8 (index 0 unused) for q = 3 (mod 8).
std::array<std::int64_t, 9> cyclotomic_n_values(const PrimePower& q,
                                                std::int64_t a, std::int64_t b);

/// 8x8 pattern of indices into n_1..n_8.
extern const std::array<std::array<int, 8>, 8> kCycloPattern8;

/// Closed-form order-8 table from (q, a, b_signed).
CycloTable cyclotomic_numbers_formula(const PrimePower& q, const TwoSquareRep& rep);

/// Resolves the sign of b for the context's concrete field presentation by
/// matching the closed-form table against the brute-force one.
TwoSquareRep fit_b_sign(const CycloCtx& ctx, TwoSquareRep rep);

/// N_1..N_4 by direct set counting, with D the union of the 8th classes
/// indexed by I.
std::array<std::int64_t, 4> compute_N1_to_N4(const CycloCtx& ctx,
                                             const std::array<int, 3>& I);

/// Closed forms for N_3, N_4; b_eff is +b_signed when I = {0,2,3} and
/// -b_signed when I = {0,2,7}.
std::pair<std::int64_t, std::int64_t> closed_form_N3_N4(const PrimePower& q,
                                                        std::int64_t a,
                                                        std::int64_t b_eff);

} // namespace hforge
