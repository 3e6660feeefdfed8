#include "hforge/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hforge {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimePower make_prime_power(std::uint64_t n) {
    if (n < 2) throw NotAPrimePower("not a prime power: " + std::to_string(n));
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            std::uint64_t m = n;
            unsigned s = 0;
            while (m % d == 0) {
                m /= d;
                ++s;
            }
            if (m != 1)
                throw NotAPrimePower("not a prime power: " + std::to_string(n));
            return {n, d, s};
        }
    }
    return {n, n, 1};
}

namespace {

using Poly = std::vector<std::uint32_t>; // ascending coefficients over GF(p)

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
    const std::size_t k = mod.size() - 1;
    std::vector<std::uint64_t> res(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            res[i + j] = (res[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    for (std::size_t d = res.size(); d-- > k;) {
        const std::uint64_t c = res[d];
        if (!c) continue;
        res[d] = 0;
        for (std::size_t j = 0; j < k; ++j)
            res[d - k + j] = (res[d - k + j] + std::uint64_t{p - 1} * c % p * mod[j]) % p;
    }
    Poly out(k, 0);
    for (std::size_t i = 0; i < k && i < res.size(); ++i)
        out[i] = static_cast<std::uint32_t>(res[i]);
    return out;
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& mod, std::uint32_t p) {
    Poly r(mod.size() - 1, 0);
    r[0] = 1;
    while (e) {
        if (e & 1) r = poly_mul_mod(r, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
    // p prime; Fermat
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    poly_trim(a);
    Poly mm = m;
    poly_trim(mm);
    const std::uint32_t lead_inv = mod_inv(mm.back(), p);
    while (a.size() >= mm.size()) {
        const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
        const std::size_t shift = a.size() - mm.size();
        for (std::size_t j = 0; j < mm.size(); ++j)
            a[shift + j] = static_cast<std::uint32_t>(
                (a[shift + j] + std::uint64_t{p - 1} * c % p * mm[j]) % p);
        poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    if (k == 2) {
        // exhaustive root check
        for (std::uint64_t r = 0; r < p; ++r)
            if ((f[0] + f[1] * r + r * r) % p == 0) return false;
        return true;
    }
    // gcd test: f irreducible iff x^(p^k) = x mod f and
    // gcd(x^(p^(k/r)) - x, f) = 1 for every prime r | k
    Poly x(k, 0);
    if (k >= 2) x[1] = 1;
    auto frob = [&](unsigned d) {
        Poly t = x;
        for (unsigned i = 0; i < d; ++i) t = poly_pow_mod(t, p, f, p);
        return t;
    };
    Poly xk = frob(static_cast<unsigned>(k));
    Poly diff = xk;
    diff[1] = (diff[1] + p - 1) % p;
    poly_trim(diff);
    if (!diff.empty()) return false;
    for (unsigned r = 2; r <= k; ++r) {
        if (k % r != 0 || !is_prime(r)) continue;
        Poly t = frob(static_cast<unsigned>(k / r));
        t[1] = (t[1] + p - 1) % p;
        Poly g = poly_gcd(f, t, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

FieldCtx FieldCtx::build(std::uint64_t p, unsigned k) {
    if (!is_prime(p)) throw Error("p must be prime: " + std::to_string(p));
    if (k < 1) throw Error("degree must be >= 1");
    std::uint64_t order = 1;
    for (unsigned i = 0; i < k; ++i) {
        order *= p;
        if (order > kMaxOrder)
            throw TableTooLarge("field order exceeds 2^26 table guard");
    }

    FieldCtx f;
    f.p_ = static_cast<std::uint32_t>(p);
    f.k_ = k;
    f.order_ = static_cast<std::uint32_t>(order);

    if (k == 1) {
        f.modulus_ = {0, 1}; // degenerate: the field is GF(p) itself
    } else {
        for (std::uint64_t low = 0;; ++low) {
            Poly cand(k + 1, 0);
            std::uint64_t v = low;
            for (unsigned i = 0; i < k; ++i) {
                cand[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            cand[k] = 1;
            if (is_irreducible(cand, f.p_)) {
                f.modulus_ = cand;
                break;
            }
        }
    }

    // least-encoding primitive element
    const std::uint64_t n = order - 1;
    const auto fs = prime_factors(n);
    auto poly_of = [&](Elem x) {
        Poly c(k, 0);
        for (unsigned i = 0; i < k; ++i) {
            c[i] = x % f.p_;
            x /= f.p_;
        }
        return c;
    };
    auto enc_of = [&](const Poly& c) {
        Elem v = 0;
        for (unsigned i = k; i-- > 0;) v = v * f.p_ + (i < c.size() ? c[i] : 0);
        return v;
    };
    for (Elem cand = 1; cand < order; ++cand) {
        const Poly cp = poly_of(cand);
        bool primitive = true;
        for (auto q : fs) {
            Poly t = poly_pow_mod(cp, n / q, f.modulus_, f.p_);
            if (enc_of(t) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            f.omega_ = cand;
            break;
        }
    }

    f.log_.assign(order, 0);
    f.antilog_.assign(n, 0);
    Poly w = poly_of(f.omega_);
    Poly x(k, 0);
    x[0] = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        const Elem e = enc_of(x);
        f.antilog_[i] = e;
        f.log_[e] = static_cast<std::uint32_t>(i);
        x = poly_mul_mod(x, w, f.modulus_, f.p_);
    }
    return f;
}

Elem FieldCtx::add(Elem a, Elem b) const {
    Elem out = 0, mul = 1;
    for (unsigned i = 0; i < k_; ++i) {
        out += (a % p_ + b % p_) % p_ * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return out;
}

Elem FieldCtx::neg(Elem a) const {
    Elem out = 0, mul = 1;
    for (unsigned i = 0; i < k_; ++i) {
        out += (p_ - a % p_) % p_ * mul;
        a /= p_;
        mul *= p_;
    }
    return out;
}

Elem FieldCtx::sub(Elem a, Elem b) const {
    Elem out = 0, mul = 1;
    for (unsigned i = 0; i < k_; ++i) {
        out += (a % p_ + p_ - b % p_) % p_ * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return out;
}

Elem FieldCtx::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    const std::uint64_t n = order_ - 1;
    return antilog_[(std::uint64_t{log_[a]} + log_[b]) % n];
}

Elem FieldCtx::inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inv(0)");
    const std::uint32_t n = order_ - 1;
    return antilog_[(n - log_[a]) % n];
}

Elem FieldCtx::pow(Elem a, std::int64_t e) const {
    if (a == 0) {
        if (e <= 0) throw DivisionByZero("0 to a nonpositive power");
        return 0;
    }
    const std::int64_t n = order_ - 1;
    std::int64_t idx = (std::int64_t{log_[a]} * (e % n)) % n;
    if (idx < 0) idx += n;
    return antilog_[idx];
}

std::uint32_t FieldCtx::log(Elem x) const {
    if (x == 0) throw LogOfZero("log(0)");
    return log_[x];
}

Elem FieldCtx::antilog(std::uint32_t i) const {
    return antilog_[i % (order_ - 1)];
}

std::vector<std::uint32_t> FieldCtx::decode(Elem x) const {
    std::vector<std::uint32_t> c(k_);
    for (unsigned i = 0; i < k_; ++i) {
        c[i] = x % p_;
        x /= p_;
    }
    return c;
}

Elem FieldCtx::encode(const std::vector<std::uint32_t>& coeffs) const {
    Elem v = 0;
    for (unsigned i = k_; i-- > 0;)
        v = v * p_ + (i < coeffs.size() ? coeffs[i] % p_ : 0);
    return v;
}

std::string poly_to_string(const std::vector<std::uint32_t>& coeffs) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ',';
        os << coeffs[i];
    }
    os << ']';
    return os.str();
}

std::string FieldCtx::header() const {
    std::ostringstream os;
    os << "GF(" << p_ << "^" << k_ << ") mod " << poly_to_string(modulus_);
    return os.str();
}

} // namespace hforge
