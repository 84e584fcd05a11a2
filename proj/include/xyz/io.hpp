#pragma once

#include <string>

#include "xyz/bits.hpp"
#include "xyz/cyclic.hpp"

namespace xyz {

/// Either "m n" followed by m rows of n characters from {0,1} (spaces inside a row are
/// ignored), or a single line "circ n: e1,e2,...". Blank lines and lines starting
/// with '#' are skipped. Errors are ParseError with the offending line number.
BitMatrix parse_matrix(const std::string& text, const std::string& source = "<matrix>");
BitMatrix read_matrix_file(const std::string& path);
/// "m n" header and rows; parse_matrix(format_matrix(h)) == h.
std::string format_matrix(const BitMatrix& h);

/// "n1 n2 n3" then "P1: e,e,...", "P2: ...", "P3: ..." (exponents may be negative).
CyclicSpec parse_cyclic(const std::string& text, const std::string& source = "<cyclic>");
CyclicSpec read_cyclic_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace xyz
