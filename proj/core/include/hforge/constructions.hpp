#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hforge/cyclotomy.hpp"
#include "hforge/group_ring.hpp"

namespace hforge {

/// Prime powers of the form 12c^2 + 4c + 3 below max, c over both signs,
/// ascending.
std::vector<std::uint64_t> admissible_q_list(std::uint64_t max);

struct QParams {
    PrimePower q;
    std::int64_t c = 0;
    std::int64_t m = 0; // (q - 3) / 8
    TwoSquareRep rep;   // fitted sign
    std::array<int, 3> I{};
    int y = 0;
    std::vector<std::uint32_t> J1, J2; // m-subsets of {0..q}
};

/// Solves q = 12c^2 + 4c + 3, fits the sign of b for the context's
/// presentation, and selects I, y, J1, J2.
QParams derive_params(const CycloCtx& ctx);

/// Paley type partial difference set D_i = C_i^{(4)} + C_{i+1}^{(4)}.
Block build_paley_pds(const CycloCtx& ctx, std::uint32_t i);

/// B_0 = ({0} x D_0) + ({1} x (F \ D_0)), B_1 = ({0} x D_2) + ({1} x D_2).
std::pair<Block, Block> build_B0_B1(const GroupCtx& z2ctx, const CycloCtx& ctx);

struct LmsSpec {
    std::uint32_t e = 0;     // exact power of 2 dividing q+1
    std::uint32_t alpha = 0; // odd, < e
    std::uint32_t beta = 0;  // (q e - alpha (q+1)) / (2 e)
    std::vector<std::uint32_t> A;                // alpha-subset of {0..2e-1}
    std::vector<std::vector<std::uint32_t>> B_sets; // e subsets of {0..q}, each size beta
};

/// Blocks D_i = omega^i (H + M_i) of the half-line difference family;
/// throws SpecViolation naming the first failed hypothesis.
std::vector<Block> build_lms_blocks(const CycloCtx& ctx, const LmsSpec& spec);

/// E_0..E_3 directly from the class/line unions driven by I, J1, J2.
std::array<Block, 4> build_E_blocks(const QParams& params, const CycloCtx& ctx);

struct DiffFamily {
    GroupCtx ctx;
    std::vector<Block> blocks;
    std::vector<std::uint32_t> declared_sizes;
    std::int64_t declared_lambda = 0;

    DiffFamily() : ctx(GroupKind::FieldAdditive, 2, 1) {}
    explicit DiffFamily(const GroupCtx& c) : ctx(c) {}
};

/// The full four-block family in Z_2 x F_{q^2} with parameters
/// (2q^2; q^2, q^2-1, q^2, q^2; 2q^2-2).
DiffFamily build_family(const CycloCtx& ctx, const QParams& params);

/// Condition bookkeeping from the I_1/I_2 reformulation; all four must hold.
struct SectionConditions {
    bool no_halfturn_overlap = false; // I_i disjoint from I_i + (q+1)
    bool index_classes_disjoint = false;
    bool size_identity = false; // |I_1| + 2|J_1| = |I_2| + 2|J_2| = q
    bool j_containment = false; // J_1 in I_2' + J_2 and J_2 in I_1' + J_1
    bool all() const {
        return no_halfturn_overlap && index_classes_disjoint && size_identity &&
               j_containment;
    }
};

SectionConditions check_section_conditions(const QParams& params);

} // namespace hforge
