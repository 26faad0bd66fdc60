#ifndef MATORD_INDUCED_HPP
#define MATORD_INDUCED_HPP

#include <optional>
#include <utility>

#include "matord/order.hpp"

namespace matord {

/* The order restricted to the subring without variable i, realized as a
 * matrix: delete column i, then the first row that is linearly dependent on
 * the rows above it (that row carries no ordering information once the
 * column is gone; every independent row still does). */
struct InducedResult {
  MonomialOrder order;    // on n-1 variables
  int removed_variable;   // 1-based, as given
  int deleted_row;        // 1-based row of the column-deleted matrix
};

/* Requires a square parent (n x n, n >= 2) and 1 <= i <= n.  For a full-rank
 * parent the column-deleted matrix always has a dependent row; its absence
 * or a validation failure of the result is a logic error, not a value. */
InducedResult induced_matrix(const MonomialOrder& o, int i);

/* Brute-force certification that induced_matrix really is the restriction:
 * every pair of monomials with zero i-th exponent and degree <= d must
 * compare identically under the parent and under the induced order.  Pairs
 * are scanned level by level (level = larger total degree), tuple order
 * within a level; the first disagreeing pair, if any, is returned with
 * coordinate i still present. */
struct RestrictionReport {
  bool pass;
  std::optional<std::pair<Monomial, Monomial>> counterexample;  // n-variable form
};

RestrictionReport restriction_agreement(const MonomialOrder& o, int i, int d);

}  // namespace matord

#endif
