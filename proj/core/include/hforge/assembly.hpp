#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hforge/constructions.hpp"
#include "hforge/group_ring.hpp"

namespace hforge {

/// Dense square +-1 matrix with packed-bit rows (bit 1 = entry -1).
class SignMatrix {
public:
    explicit SignMatrix(std::uint32_t order, int fill = +1);

    std::uint32_t order() const { return order_; }
    int get(std::uint32_t r, std::uint32_t c) const {
        return (bits_[row_offset(r) + c / 64] >> (c % 64)) & 1 ? -1 : +1;
    }
    void set(std::uint32_t r, std::uint32_t c, int v) {
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        auto& w = bits_[row_offset(r) + c / 64];
        if (v < 0)
            w |= mask;
        else
            w &= ~mask;
    }

    /// Dot product of two rows: order - 2 * popcount(xor).
    std::int64_t row_dot(std::uint32_t r1, std::uint32_t r2) const;
    std::int64_t row_sum(std::uint32_t r) const;

    bool operator==(const SignMatrix&) const = default;

private:
    std::size_t row_offset(std::uint32_t r) const { return std::size_t{r} * words_; }

    std::uint32_t order_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Group invariant matrix of a block: M[x][y] = -1 iff y - x in B.
SignMatrix block_to_sign_matrix(const GroupCtx& ctx, const Block& b);

/// The negation permutation x -> -x (the abelian generalization of the
/// back-diagonal matrix).
std::vector<std::uint32_t> inversion_perm(const GroupCtx& ctx);

/// Canonical Goethals-Seidel array over four order-m matrices and the
/// permutation R; output order 4m.
SignMatrix goethals_seidel(const std::array<const SignMatrix*, 4>& mats,
                           const std::vector<std::uint32_t>& rperm);

struct BorderScheme {
    std::array<int, 4> slot_perm{0, 1, 2, 3}; // array slot -> family block
    std::array<int, 4> c{1, 1, 1, 1};         // corner signs
    std::array<int, 4> s{1, 1, 1, 1};         // border row/column signs
    std::array<int, 4> eps{1, 1, 1, 1};       // interior negations

    bool operator==(const BorderScheme&) const = default;
};

/// Bordered Goethals-Seidel realization of the Wallis-Whiteman construction:
/// each block matrix is bordered to order |G|+1 per the scheme and fed into
/// the same array with the inversion extended by a lone corner fixed point.
/// Output order 4(|G|+1).
SignMatrix wallis_whiteman(const DiffFamily& family, const BorderScheme& scheme);

struct CalibrateOptions {
    bool stop_at_first = false;
    std::size_t limit = 0; // 0 = collect all
};

/// Exhaustive search over slot permutations and per-slot sign choices;
/// returns every scheme whose assembled matrix is Hadamard, in a fixed
/// deterministic order. Throws CalibrationExhausted when none passes.
std::vector<BorderScheme> calibrate_border_scheme(const DiffFamily& family,
                                                  const CalibrateOptions& opts = {});

} // namespace hforge
