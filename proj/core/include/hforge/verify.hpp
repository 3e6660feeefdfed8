#pragma once

#include <string>

#include "hforge/assembly.hpp"
#include "hforge/constructions.hpp"
#include "hforge/group_ring.hpp"

namespace hforge {

/// Outcome of one brute-force check. details carries the first counterexample
/// when passed is false and is empty otherwise.
struct VerifyReport {
    std::string subject;
    bool passed = false;
    std::string details;
    double ms = 0.0;

    std::string to_string() const;
};

/// Autocorrelation = lambda G + (sum k_i - lambda) 0_G, with block sizes
/// matching the declaration.
VerifyReport verify_difference_family(const DiffFamily& family);

/// D D^(-1) = (q^2-5)/4 D + (q^2-1)/4 D-bar + (q^2-1)/2 0, for D in F* with
/// 0 not in D.
VerifyReport verify_pds(const GroupCtx& ctx, const Block& d);

/// Four-block difference family with sum k_i - |G| = lambda.
VerifyReport verify_type_H(const GroupCtx& ctx, const std::vector<Block>& blocks);

/// E_0 E_1^(-1) + E_1 E_0^(-1) + E_2 E_3^(-1) + E_3 E_2^(-1)
///   = (q-1)^2 F + 2 D_0 - 2 D_2.
VerifyReport verify_cross_condition(const CycloCtx& ctx, const std::array<Block, 4>& e);

/// The same cross sum minus the double sum of 8th-class cross products equals
/// Z = 8m(4m+1) 0 + m(28m+5) F*.
VerifyReport verify_lemma_3_3(const CycloCtx& ctx, const std::array<Block, 4>& e,
                              const QParams& params);

/// Every distinct row pair orthogonal; reports the lowest offending pair.
VerifyReport verify_hadamard(const SignMatrix& m);

} // namespace hforge
