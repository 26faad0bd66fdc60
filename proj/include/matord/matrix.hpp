#ifndef MATORD_MATRIX_HPP
#define MATORD_MATRIX_HPP

#include <initializer_list>
#include <optional>
#include <vector>

#include "matord/rational.hpp"

namespace matord {

/* Dense row-major matrix of Rationals.  Everything in this library is small
 * (a few dozen rows at most), so no sparsity and no cleverness.  Indices are
 * 0-based here; user-facing layers speak 1-based variable indices. */
class Matrix {
 public:
  Matrix(int rows, int cols);  // zero-filled; throws unless rows,cols >= 1
  Matrix(std::initializer_list<std::initializer_list<long>> grid);
  Matrix(std::initializer_list<std::initializer_list<Rational>> grid);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  std::vector<Rational> row(int r) const;

  Matrix without_column(int c) const;  // 0-based
  Matrix without_row(int r) const;     // 0-based
  Matrix top_rows(int k) const;        // rows 0..k-1

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix scalar_mul(const Rational& s, const Matrix& a);

// Exact A*v for an integer exponent vector v.
std::vector<Rational> mat_vec(const Matrix& a, const std::vector<int>& v);

/* Determinant by fraction-free (Bareiss) elimination: rows are first scaled
 * to integers (scale factors divided back out at the end), then eliminated
 * with exact integer divisions only, which keeps intermediates from
 * exploding the way naive rational elimination does. */
Rational determinant(const Matrix& a);

/* Independent determinant oracle: Laplace cofactor expansion along the first
 * row, memoized on the active column subset so sizes into the teens stay
 * cheap.  Shares no elimination logic with determinant(). */
Rational determinant_cofactor(const Matrix& a);

int rank(const Matrix& a);

/* 0-based index of the first row that is a linear combination of the rows
 * above it (a zero row qualifies, including row 0); nullopt if all rows are
 * independent. */
std::optional<int> first_dependent_row(const Matrix& a);

/* Coefficients c with sum_k c[k] * basis.row(k) = target, or nullopt when
 * target lies outside the row span.  Free variables are set to zero, so the
 * result is deterministic; for a square nonsingular basis it is the unique
 * solution. */
std::optional<std::vector<Rational>> solve_row_combination(
    const Matrix& basis, const std::vector<Rational>& target);

}  // namespace matord

#endif
