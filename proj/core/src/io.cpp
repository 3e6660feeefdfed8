#include "hforge/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace hforge {

namespace {

std::int64_t derived_lambda(const std::vector<Block>& blocks, std::uint64_t v) {
    // For a valid difference family: sum k_i (k_i - 1) = lambda (v - 1).
    std::int64_t num = 0;
    for (const auto& b : blocks) {
        const auto k = static_cast<std::int64_t>(b.size());
        num += k * (k - 1);
    }
    if (v < 2 || num % static_cast<std::int64_t>(v - 1) != 0) return -1;
    return num / static_cast<std::int64_t>(v - 1);
}

void expect(std::istream& is, const std::string& tok, const std::string& what) {
    std::string got;
    if (!(is >> got) || got != tok)
        throw ParseError("expected '" + tok + "' in " + what + ", got '" + got + "'");
}

} // namespace

void write_family(std::ostream& os, const FamilyFile& f) {
    os << "DF Z2xGF(" << f.p << "^" << f.k << ") mod " << poly_to_string(f.modulus)
       << " blocks=" << f.family.blocks.size() << "\n";
    const std::uint32_t fo = f.family.ctx.field_order();
    for (std::size_t i = 0; i < f.family.blocks.size(); ++i) {
        const Block& b = f.family.blocks[i];
        os << "block " << i << " size=" << b.size() << ":";
        for (auto g : b) {
            const std::uint32_t bit = g / fo;
            std::uint32_t x = g % fo;
            os << " " << bit << ":";
            for (unsigned d = 0; d < f.k; ++d) {
                if (d) os << ",";
                os << x % f.p;
                x /= f.p;
            }
        }
        os << "\n";
    }
}

FamilyFile read_family(std::istream& is) {
    FamilyFile f;
    expect(is, "DF", "family header");
    std::string grp;
    if (!(is >> grp)) throw ParseError("missing group tag");
    unsigned p = 0, k = 0;
    if (std::sscanf(grp.c_str(), "Z2xGF(%u^%u)", &p, &k) != 2)
        throw ParseError("bad group tag: " + grp);
    f.p = p;
    f.k = k;
    expect(is, "mod", "family header");
    std::string poly;
    if (!(is >> poly) || poly.size() < 2 || poly.front() != '[' || poly.back() != ']')
        throw ParseError("bad modulus list: " + poly);
    {
        std::stringstream ss(poly.substr(1, poly.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                f.modulus.push_back(static_cast<std::uint32_t>(std::stoul(item)));
            } catch (const std::exception&) {
                throw ParseError("bad modulus coefficient: " + item);
            }
        }
    }
    if (f.modulus.size() != f.k + 1)
        throw ParseError("modulus degree does not match field degree");
    std::string blocks_tok;
    if (!(is >> blocks_tok) || blocks_tok.rfind("blocks=", 0) != 0)
        throw ParseError("missing blocks= count");
    const auto nblocks = std::stoul(blocks_tok.substr(7));

    const GroupCtx ctx(GroupKind::Z2TimesField, f.p, f.k);
    f.family = DiffFamily(ctx);
    const std::uint32_t fo = ctx.field_order();
    for (std::size_t i = 0; i < nblocks; ++i) {
        expect(is, "block", "block line");
        std::size_t idx = 0;
        if (!(is >> idx) || idx != i) throw ParseError("block index out of order");
        std::string size_tok;
        if (!(is >> size_tok) || size_tok.rfind("size=", 0) != 0 || size_tok.back() != ':')
            throw ParseError("missing size= on block line");
        const auto size = std::stoul(size_tok.substr(5, size_tok.size() - 6));
        Block b;
        for (std::size_t j = 0; j < size; ++j) {
            std::string tok;
            if (!(is >> tok)) throw ParseError("truncated block " + std::to_string(i));
            unsigned bit = 0;
            const auto colon = tok.find(':');
            if (colon == std::string::npos) throw ParseError("bad element token: " + tok);
            try {
                bit = static_cast<unsigned>(std::stoul(tok.substr(0, colon)));
            } catch (const std::exception&) {
                throw ParseError("bad element token: " + tok);
            }
            if (bit > 1) throw ParseError("bad Z2 component in token: " + tok);
            std::uint32_t x = 0, mul = 1;
            std::stringstream ss(tok.substr(colon + 1));
            std::string digit;
            unsigned d = 0;
            while (std::getline(ss, digit, ',')) {
                std::uint32_t val = 0;
                try {
                    val = static_cast<std::uint32_t>(std::stoul(digit));
                } catch (const std::exception&) {
                    throw ParseError("bad coefficient in token: " + tok);
                }
                if (val >= f.p) throw ParseError("coefficient out of range in: " + tok);
                x += val * mul;
                mul *= f.p;
                ++d;
            }
            if (d != f.k) throw ParseError("wrong coefficient count in token: " + tok);
            b.push_back(bit * fo + x);
        }
        f.family.blocks.push_back(std::move(b));
        f.family.declared_sizes.push_back(static_cast<std::uint32_t>(size));
    }
    f.family.declared_lambda = derived_lambda(f.family.blocks, ctx.order());
    return f;
}

void write_matrix(std::ostream& os, const SignMatrix& m) {
    os << "H " << m.order() << "\n";
    std::string row(m.order(), '+');
    for (std::uint32_t r = 0; r < m.order(); ++r) {
        for (std::uint32_t c = 0; c < m.order(); ++c)
            row[c] = m.get(r, c) > 0 ? '+' : '-';
        os << row << "\n";
    }
}

SignMatrix read_matrix(std::istream& is) {
    expect(is, "H", "matrix header");
    std::uint32_t order = 0;
    if (!(is >> order) || order == 0) throw ParseError("bad matrix order");
    SignMatrix m(order);
    for (std::uint32_t r = 0; r < order; ++r) {
        std::string row;
        if (!(is >> row) || row.size() != order)
            throw ParseError("bad matrix row " + std::to_string(r));
        for (std::uint32_t c = 0; c < order; ++c) {
            if (row[c] == '-')
                m.set(r, c, -1);
            else if (row[c] != '+')
                throw ParseError("bad matrix entry at row " + std::to_string(r));
        }
    }
    return m;
}

namespace {

std::string signs_to_string(const std::array<int, 4>& s) {
    std::string out;
    for (int v : s) out += v > 0 ? '+' : '-';
    return out;
}

std::array<int, 4> signs_from_string(const std::string& s) {
    if (s.size() != 4) throw ParseError("bad sign string: " + s);
    std::array<int, 4> out{};
    for (int i = 0; i < 4; ++i) {
        if (s[i] == '+')
            out[i] = 1;
        else if (s[i] == '-')
            out[i] = -1;
        else
            throw ParseError("bad sign string: " + s);
    }
    return out;
}

} // namespace

void write_schemes(std::ostream& os, const std::vector<BorderScheme>& schemes) {
    for (const auto& sch : schemes) {
        os << "perm=" << sch.slot_perm[0] << "," << sch.slot_perm[1] << ","
           << sch.slot_perm[2] << "," << sch.slot_perm[3]
           << " c=" << signs_to_string(sch.c) << " s=" << signs_to_string(sch.s)
           << " eps=" << signs_to_string(sch.eps) << "\n";
    }
}

std::vector<BorderScheme> read_schemes(std::istream& is) {
    std::vector<BorderScheme> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        BorderScheme sch;
        char c[5] = {}, s[5] = {}, eps[5] = {};
        if (std::sscanf(line.c_str(), "perm=%d,%d,%d,%d c=%4s s=%4s eps=%4s",
                        &sch.slot_perm[0], &sch.slot_perm[1], &sch.slot_perm[2],
                        &sch.slot_perm[3], c, s, eps) != 7)
            throw ParseError("bad scheme line: " + line);
        sch.c = signs_from_string(c);
        sch.s = signs_from_string(s);
        sch.eps = signs_from_string(eps);
        out.push_back(sch);
    }
    return out;
}

std::string family_to_string(const FamilyFile& f) {
    std::ostringstream os;
    write_family(os, f);
    return os.str();
}

std::string matrix_to_string(const SignMatrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

} // namespace hforge
