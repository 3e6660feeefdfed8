#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hforge/assembly.hpp"
#include "hforge/constructions.hpp"

namespace hforge {

/// A difference family together with the field presentation it was written
/// under. The modulus is carried verbatim so files round-trip bit-exactly.
struct FamilyFile {
    std::uint32_t p = 0;
    unsigned k = 0; // field extension degree (2s)
    std::vector<std::uint32_t> modulus;
    DiffFamily family;
};

/// Line 1: "DF Z2xGF(<p>^<k>) mod <poly> blocks=<n>"; then per block
/// "block <i> size=<k>: bit:c0,c1,... ...".
void write_family(std::ostream& os, const FamilyFile& f);
FamilyFile read_family(std::istream& is); // throws ParseError

/// Line 1: "H <order>"; then one row per line over {+, -}.
void write_matrix(std::ostream& os, const SignMatrix& m);
SignMatrix read_matrix(std::istream& is); // throws ParseError

/// One line per scheme: "perm=<p0,p1,p2,p3> c=<++++> s=<++++> eps=<++++>".
void write_schemes(std::ostream& os, const std::vector<BorderScheme>& schemes);
std::vector<BorderScheme> read_schemes(std::istream& is); // throws ParseError

std::string family_to_string(const FamilyFile& f);
std::string matrix_to_string(const SignMatrix& m);

} // namespace hforge
