#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hforge/errors.hpp"

namespace hforge {

/// A field element in its canonical integer encoding: base-p digits of the
/// coefficient vector, coeffs[0] least significant.
using Elem = std::uint32_t;

struct PrimePower {
    std::uint64_t value = 0;
    std::uint64_t p = 0;
    unsigned s = 0;
};

bool is_prime(std::uint64_t n);

/// Factors n as p^s with p prime, or throws NotAPrimePower.
PrimePower make_prime_power(std::uint64_t n);

/// GF(p^k) with a fixed, fully deterministic presentation: the modulus is the
/// first monic irreducible of degree k in ascending encoding order of its
/// non-leading coefficients, and omega is the nonzero element of least
/// encoding with multiplicative order p^k - 1. Discrete log and antilog
/// tables are materialized for the whole field.
class FieldCtx {
public:
    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 26;

    static FieldCtx build(std::uint64_t p, unsigned k);

    std::uint64_t p() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint32_t order() const { return order_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Elem omega() const { return omega_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::int64_t e) const;

    /// log_omega(x) in [0, p^k - 2]; throws LogOfZero on x = 0.
    std::uint32_t log(Elem x) const;
    Elem antilog(std::uint32_t i) const;

    std::vector<std::uint32_t> decode(Elem x) const;
    Elem encode(const std::vector<std::uint32_t>& coeffs) const;

    /// "GF(<p>^<k>) mod <poly>", poly as ascending coefficient list.
    std::string header() const;

    bool operator==(const FieldCtx& other) const = default;

private:
    FieldCtx() = default;

    std::uint32_t p_ = 0;
    unsigned k_ = 0;
    std::uint32_t order_ = 0;
    std::vector<std::uint32_t> modulus_; // k+1 coefficients, ascending, monic
    Elem omega_ = 0;
    std::vector<std::uint32_t> log_;    // log_[0] unused
    std::vector<Elem> antilog_;
};

/// Ascending coefficient list rendered as "[c0,c1,...]".
std::string poly_to_string(const std::vector<std::uint32_t>& coeffs);

} // namespace hforge
