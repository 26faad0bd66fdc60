#include "matord/induced.hpp"

#include <stdexcept>

#include "pair_search.hpp"

namespace matord {

InducedResult induced_matrix(const MonomialOrder& o, int i) {
  const Matrix& a = o.matrix();
  if (a.rows() != a.cols())
    throw std::invalid_argument("induced_matrix: parent matrix must be square");
  if (a.cols() < 2)
    throw std::invalid_argument("induced_matrix: parent needs at least two variables");
  if (i < 1 || i > a.cols())
    throw std::invalid_argument("induced_matrix: variable index out of range");

  Matrix col_deleted = a.without_column(i - 1);
  auto dep = first_dependent_row(col_deleted);
  // n rows in an (n-1)-dimensional space always contain a dependent one.
  if (!dep) throw std::logic_error("induced_matrix: no dependent row after column deletion");

  auto v = MonomialOrder::validate(col_deleted.without_row(*dep));
  if (auto* err = std::get_if<ValidationError>(&v))
    throw std::logic_error("induced_matrix: reduced matrix fails validation: " + err->message());
  return InducedResult{std::get<MonomialOrder>(std::move(v)), i, *dep + 1};
}

RestrictionReport restriction_agreement(const MonomialOrder& o, int i, int d) {
  InducedResult ind = induced_matrix(o, i);
  const int dropped = i - 1;
  detail::MonomialMap lift = [dropped](const Monomial& m) {
    return m.with_zero_inserted(dropped);
  };
  detail::MonomialMap id = [](const Monomial& m) { return m; };
  auto witness = detail::first_table_disagreement(
      o.matrix(), ind.order.matrix(), o.nvars() - 1, d, lift, id, lift);
  if (!witness) return RestrictionReport{true, std::nullopt};
  return RestrictionReport{false, std::move(witness)};
}

}  // namespace matord
