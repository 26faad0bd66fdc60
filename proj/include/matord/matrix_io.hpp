#ifndef MATORD_MATRIX_IO_HPP
#define MATORD_MATRIX_IO_HPP

#include <stdexcept>
#include <string>

#include "matord/matrix.hpp"
#include "matord/monomial.hpp"

namespace matord {

/* Text format for matrices: a header line "m n", then m lines of n entries,
 * each an optionally signed integer or "p/q".  Lines starting with '#' are
 * comments and are skipped anywhere.  ASCII only, '\n' newlines. */

struct ParseError : std::runtime_error {
  ParseError(std::string what, int line, int column);
  int line;    // 1-based
  int column;  // 1-based
};

// Throws ParseError with position on any malformed input, including row or
// column counts that disagree with the header.
Matrix parse_matrix(const std::string& text);

// Inverse of parse_matrix: parse_matrix(render_matrix(m)) == m.  Whole
// numbers are rendered without a denominator.
std::string render_matrix(const Matrix& m);

// "2,3,0" -> Monomial({2,3,0}).  Comma-separated nonnegative integers, no
// spaces.  Throws ParseError (line 1) on anything else.
Monomial parse_monomial(const std::string& text);

}  // namespace matord

#endif
