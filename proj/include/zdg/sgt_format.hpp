#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zdg/semigroup.hpp"

namespace zdg {

// Cayley table text format (".sgt"):
//
//   5                      <- order n
//   names: 0 a b c d       <- optional, n labels, the first names the zero
//   0 0 0 0 0              <- n rows of n indices, row i column j = i*j
//   ...
//
// '#' starts a comment running to the end of the line; blank lines are
// ignored. A corpus is a plain concatenation of records.

/// Parses exactly one record. Throws ParseError. The table is not validated.
CayleyTable parse_sgt(const std::string& text);

/// Parses every record in the stream, in order. Throws ParseError.
std::vector<CayleyTable> read_sgt_stream(std::istream& in);

/// One record, newline terminated.
std::string format_sgt(const CayleyTable& table);

/// Records separated by a blank line.
void write_sgt_stream(std::ostream& out, const std::vector<CayleyTable>& tables);

}  // namespace zdg
