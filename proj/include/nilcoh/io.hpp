#pragma once

#include <iosfwd>
#include <string>

#include "nilcoh/lie_algebra.hpp"

namespace nilcoh {

// Line-oriented structure-constant interchange format:
//   # comment (to end of line)
//   dim N
//   i j k p/q        -- c_{ij}^k = p/q, 1-based indices, i < j
// Blank lines are ignored. The first non-comment line must be the dim line.
//
// Parse errors carry the 1-based line number (errc::parse_error); the
// constructed algebra is Jacobi-validated as usual.
LieAlgebra parse_structure_file(std::istream& in, std::string label);
LieAlgebra load_structure_file(const std::string& path);

void write_structure_file(std::ostream& out, const LieAlgebra& g);
void write_structure_file(std::ostream& out, const GradedLieAlgebra& g);

}  // namespace nilcoh
