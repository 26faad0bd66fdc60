#include "matord/matrix.hpp"

#include <stdexcept>
#include <unordered_map>

namespace matord {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("Matrix: dimensions must be >= 1");
  e_.resize(static_cast<size_t>(rows) * cols);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> grid)
    : Matrix(static_cast<int>(grid.size()),
             grid.size() ? static_cast<int>(grid.begin()->size()) : 0) {
  int r = 0;
  for (const auto& row : grid) {
    if (static_cast<int>(row.size()) != cols_)
      throw std::invalid_argument("Matrix: ragged initializer");
    int c = 0;
    for (long x : row) at(r, c++) = Rational(x);
    ++r;
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> grid)
    : Matrix(static_cast<int>(grid.size()),
             grid.size() ? static_cast<int>(grid.begin()->size()) : 0) {
  int r = 0;
  for (const auto& row : grid) {
    if (static_cast<int>(row.size()) != cols_)
      throw std::invalid_argument("Matrix: ragged initializer");
    int c = 0;
    for (const Rational& x : row) at(r, c++) = x;
    ++r;
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

std::vector<Rational> Matrix::row(int r) const {
  std::vector<Rational> out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

Matrix Matrix::without_column(int c) const {
  if (cols_ < 2) throw std::invalid_argument("Matrix: cannot drop only column");
  Matrix m(rows_, cols_ - 1);
  for (int r = 0; r < rows_; ++r)
    for (int j = 0, k = 0; j < cols_; ++j)
      if (j != c) m.at(r, k++) = at(r, j);
  return m;
}

Matrix Matrix::without_row(int r) const {
  if (rows_ < 2) throw std::invalid_argument("Matrix: cannot drop only row");
  Matrix m(rows_ - 1, cols_);
  for (int i = 0, k = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (int c = 0; c < cols_; ++c) m.at(k, c) = at(i, c);
    ++k;
  }
  return m;
}

Matrix Matrix::top_rows(int k) const {
  Matrix m(k, cols_);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

Matrix scalar_mul(const Rational& s, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = s * a.at(i, j);
  return out;
}

std::vector<Rational> mat_vec(const Matrix& a, const std::vector<int>& v) {
  if (static_cast<int>(v.size()) != a.cols())
    throw std::invalid_argument("mat_vec: length mismatch");
  std::vector<Rational> out(a.rows());
  for (int r = 0; r < a.rows(); ++r) {
    Rational acc;
    for (int c = 0; c < a.cols(); ++c) {
      if (v[c] == 0) continue;
      acc += a.at(r, c) * Rational(v[c]);
    }
    out[r] = acc;
  }
  return out;
}

namespace {

/* Integer row images of a rational matrix: each row multiplied by the lcm of
 * its denominators.  Returns the scaled rows and the (positive) scale
 * factors, so det(a) = det(scaled) / prod(scales). */
void integer_rows(const Matrix& a, std::vector<std::vector<mpz_class>>& rows,
                  std::vector<mpz_class>& scales) {
  rows.assign(a.rows(), std::vector<mpz_class>(a.cols()));
  scales.assign(a.rows(), 1);
  for (int r = 0; r < a.rows(); ++r) {
    mpz_class l = 1;
    for (int c = 0; c < a.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(r, c).den().get_mpz_t());
    for (int c = 0; c < a.cols(); ++c)
      rows[r][c] = a.at(r, c).num() * (l / a.at(r, c).den());
    scales[r] = l;
  }
}

}  // namespace

Rational determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const int n = a.rows();

  std::vector<std::vector<mpz_class>> m;
  std::vector<mpz_class> scales;
  integer_rows(a, m, scales);

  // Bareiss: after step k, every entry is an exact minor; divisions by the
  // previous pivot leave no remainder.
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) { swap = r; break; }
      if (swap < 0) return Rational(0);
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        mpz_class t = m[r][c] * m[k][k] - m[r][k] * m[k][c];
        mpz_divexact(m[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[r][k] = 0;
    }
    prev = m[k][k];
  }
  mpz_class det_scaled = m[n - 1][n - 1] * sign;
  mpz_class denom = 1;
  for (const auto& s : scales) denom *= s;
  return Rational(det_scaled, denom);
}

namespace {

// det of the square submatrix given by rows `row..` and the columns set in
// `colmask`, expanding along row `row`.  Memoized per top-level call: the row
// is determined by popcount(colmask), so the mask alone is a sound key.
Rational cofactor_rec(const Matrix& a, int row, unsigned colmask,
                      std::unordered_map<unsigned, Rational>& memo) {
  if (colmask == 0) return Rational(1);
  auto it = memo.find(colmask);
  if (it != memo.end()) return it->second;
  Rational acc;
  int sign = 1;
  for (unsigned rest = colmask; rest;) {
    unsigned bit = rest & (~rest + 1u);
    rest ^= bit;
    int c = __builtin_ctz(bit);
    if (!a.at(row, c).is_zero()) {
      Rational sub = cofactor_rec(a, row + 1, colmask ^ bit, memo);
      Rational term = a.at(row, c) * sub;
      acc += (sign > 0) ? term : -term;
    }
    sign = -sign;
  }
  memo.emplace(colmask, acc);
  return acc;
}

}  // namespace

Rational determinant_cofactor(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const int n = a.rows();
  if (n > 24) throw std::invalid_argument("determinant_cofactor: size beyond oracle range");
  std::unordered_map<unsigned, Rational> memo;
  return cofactor_rec(a, 0, (n == 32 ? ~0u : (1u << n) - 1u), memo);
}

namespace {

/* Incremental exact Gaussian elimination over the rows of `a`.  `echelon`
 * holds reduced independent rows with their pivot columns.  Returns the
 * reduction of `next` against the current echelon; zero result means the row
 * is dependent. */
struct Echelon {
  std::vector<std::vector<Rational>> rows;
  std::vector<int> pivot_col;

  // Reduces v in place; returns false if v reduces to zero.
  bool insert(std::vector<Rational> v) {
    for (size_t i = 0; i < rows.size(); ++i) {
      const Rational& lead = v[pivot_col[i]];
      if (lead.is_zero()) continue;
      Rational f = lead / rows[i][pivot_col[i]];
      for (size_t c = 0; c < v.size(); ++c) v[c] -= f * rows[i][c];
    }
    int p = -1;
    for (size_t c = 0; c < v.size(); ++c)
      if (!v[c].is_zero()) { p = static_cast<int>(c); break; }
    if (p < 0) return false;
    rows.push_back(std::move(v));
    pivot_col.push_back(p);
    return true;
  }
};

}  // namespace

int rank(const Matrix& a) {
  Echelon e;
  int r = 0;
  for (int i = 0; i < a.rows(); ++i)
    if (e.insert(a.row(i))) ++r;
  return r;
}

std::optional<int> first_dependent_row(const Matrix& a) {
  Echelon e;
  for (int i = 0; i < a.rows(); ++i)
    if (!e.insert(a.row(i))) return i;
  return std::nullopt;
}

std::optional<std::vector<Rational>> solve_row_combination(
    const Matrix& basis, const std::vector<Rational>& target) {
  if (static_cast<int>(target.size()) != basis.cols())
    throw std::invalid_argument("solve_row_combination: length mismatch");
  const int m = basis.rows();   // unknowns
  const int n = basis.cols();   // equations

  // Augmented system basis^T * c = target^T, Gauss-Jordan with exact pivots.
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(m + 1));
  for (int eq = 0; eq < n; ++eq) {
    for (int k = 0; k < m; ++k) g[eq][k] = basis.at(k, eq);
    g[eq][m] = target[eq];
  }

  int row = 0;
  std::vector<std::pair<int, int>> pivots;  // (row, col)
  for (int col = 0; col < m && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (!g[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(g[row], g[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == row || g[r][col].is_zero()) continue;
      Rational f = g[r][col] / g[row][col];
      for (int c = col; c <= m; ++c) g[r][c] -= f * g[row][c];
    }
    pivots.emplace_back(row, col);
    ++row;
  }
  for (int r = row; r < n; ++r)
    if (!g[r][m].is_zero()) return std::nullopt;  // inconsistent

  std::vector<Rational> c(m);  // free variables stay zero
  for (auto [r, col] : pivots) c[col] = g[r][m] / g[r][col];
  return c;
}

}  // namespace matord
