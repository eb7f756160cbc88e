#pragma once

#include <filesystem>
#include <iosfwd>

#include "oramsey/coloring.hpp"

namespace oramsey {

// Binary coloring format: one ASCII header line
//   ordered-coloring v1 k=<k> n=<N>\n
// followed by ceil(C(N,k)/8) payload bytes.  Bit j (byte j/8, bit j%8,
// LSB first) is the color of the colex-rank-j subset; pad bits are zero.
// Files written without self-verification carry an extra "unverified"
// header token.

void save_coloring(const OrderedColoring& c, std::ostream& out, bool mark_unverified = false);
void save_coloring(const OrderedColoring& c, const std::filesystem::path& path,
                   bool mark_unverified = false);

// Throws parse_error naming the offending field on malformed input.
OrderedColoring load_coloring(std::istream& in, bool* unverified = nullptr);
OrderedColoring load_coloring(const std::filesystem::path& path, bool* unverified = nullptr);

}  // namespace oramsey
