#include "matord/equivalence.hpp"

#include <stdexcept>

#include "pair_search.hpp"

namespace matord {

namespace {

// Inverse of a lower-triangular matrix with positive diagonal, by forward
// substitution; the inverse is again lower triangular with positive diagonal.
Matrix invert_lower(const Matrix& l) {
  const int m = l.rows();
  Matrix inv(m, m);
  for (int col = 0; col < m; ++col) {
    // Solve L * x = e_col, top down.
    std::vector<Rational> x(m);
    for (int r = 0; r < m; ++r) {
      Rational rhs = (r == col) ? Rational(1) : Rational(0);
      for (int c = 0; c < r; ++c) rhs -= l.at(r, c) * x[c];
      x[r] = rhs / l.at(r, r);
    }
    for (int r = 0; r < m; ++r) inv.at(r, col) = x[r];
  }
  return inv;
}

}  // namespace

std::optional<Matrix> lower_factor(const MonomialOrder& first, const MonomialOrder& second) {
  const Matrix& a = first.matrix();
  const Matrix& b = second.matrix();
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("lower_factor: shape mismatch");

  const int m = a.rows();
  Matrix l(m, m);
  for (int k = 0; k < m; ++k) {
    auto c = solve_row_combination(a.top_rows(k + 1), b.row(k));
    if (!c) return std::nullopt;
    if ((*c)[k].sign() <= 0) return std::nullopt;  // diagonal must be positive
    for (int j = 0; j <= k; ++j) l.at(k, j) = (*c)[j];
  }
  return l;
}

std::optional<std::pair<Monomial, Monomial>> same_order_bounded(
    const MonomialOrder& a, const MonomialOrder& b, int d) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("same_order_bounded: variable counts differ");
  return detail::first_order_disagreement(a.matrix(), b.matrix(), a.nvars(), d);
}

std::optional<std::pair<Monomial, Monomial>> distinguishing_pair(
    const MonomialOrder& a, const MonomialOrder& b, int d) {
  return same_order_bounded(a, b, d);
}

EquivalenceVerdict equivalent(const MonomialOrder& a, const MonomialOrder& b, int d) {
  if (auto l = lower_factor(a, b)) return Equivalent{std::move(*l)};
  if (auto m = lower_factor(b, a)) return Equivalent{invert_lower(*m)};
  if (auto w = distinguishing_pair(a, b, d)) return Distinct{std::move(w->first), std::move(w->second)};
  return UndeterminedUpTo{d};
}

int default_equivalence_bound(int nvars) { return nvars <= 5 ? 8 : 5; }

}  // namespace matord
