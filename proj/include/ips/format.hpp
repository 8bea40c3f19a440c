#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ips/lattice.hpp"

namespace ips {

// Syntax error in an .ips document, with 1-based source position.
struct ParseError : Error {
    ParseError(std::size_t line_, std::size_t column_, const std::string& what)
        : Error(what), line(line_), column(column_) {}
    std::size_t line;
    std::size_t column;
};

// Parses the sqrt(p)/q * { (x; y); ... } notation.
//   - "#" starts a comment to end of line, whitespace is insignificant
//   - "+-" or "±" before an abscissa expands the entry into both sign variants
//   - ";" and "," both separate coordinates
//   - a non-squarefree radicand is absorbed into the ordinates, with a warning
// Duplicate points across entries raise DuplicatePointError; the same point
// arising twice from one entry's expansion is kept once.
PointSet parse_set(std::string_view text, std::vector<std::string>* warnings = nullptr);

// Canonical byte-deterministic form: header line, one "(x; y);" per line in
// lexicographic order, no sign compression.
std::string serialize_set(const PointSet& S);

}  // namespace ips
