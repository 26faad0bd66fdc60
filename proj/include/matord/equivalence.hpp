#ifndef MATORD_EQUIVALENCE_HPP
#define MATORD_EQUIVALENCE_HPP

#include <optional>
#include <utility>
#include <variant>

#include "matord/order.hpp"

namespace matord {

/* L * A = B with L lower triangular and positive on the diagonal: then A and
 * B define the same order (row k of B is a positive multiple of row k of A
 * plus a correction from rows above, which earlier rows have already
 * decided). */
struct Equivalent {
  Matrix certificate;  // certificate * first = second, exactly
};

// The two orders disagree on this pair: strict and opposite verdicts.
struct Distinct {
  Monomial a, b;
};

/* Neither a certificate nor a disagreement up to the degree bound.  The
 * algebraic certificate is sufficient but not known to be necessary, so this
 * third verdict never overstates what was checked. */
struct UndeterminedUpTo {
  int degree;
};

using EquivalenceVerdict = std::variant<Equivalent, Distinct, UndeterminedUpTo>;

/* L with second = L * first, L lower triangular with positive diagonal, or
 * nullopt when the row-by-row solve fails or some diagonal entry is not
 * positive.  Row k of `second` is solved against rows 0..k of `first`; free
 * variables are zero, so for full-rank square inputs L is unique. */
std::optional<Matrix> lower_factor(const MonomialOrder& first, const MonomialOrder& second);

/* Compares every pair of distinct monomials of degree <= d under both
 * orders.  nullopt = the orders agree on all of them; otherwise the first
 * disagreeing pair in the canonical enumeration (level = larger degree, then
 * positional in tuple order). */
std::optional<std::pair<Monomial, Monomial>> same_order_bounded(
    const MonomialOrder& a, const MonomialOrder& b, int d);

/* First pair ordered strictly oppositely by the two orders, searched in
 * increasing level then positionally; nullopt if none up to degree d.  For
 * valid orders a disagreement is always strict, so this coincides with
 * same_order_bounded's witness. */
std::optional<std::pair<Monomial, Monomial>> distinguishing_pair(
    const MonomialOrder& a, const MonomialOrder& b, int d);

/* Certificate in either direction (an inverse of a lower-triangular factor
 * is again lower triangular with positive diagonal, so the stored
 * certificate always satisfies certificate * a = b); otherwise a bounded
 * witness search; otherwise undetermined at d. */
EquivalenceVerdict equivalent(const MonomialOrder& a, const MonomialOrder& b, int d);

// Default search bound: pair counts grow as C(n+d, d)^2, so deeper bounds
// are only affordable on few variables.
int default_equivalence_bound(int nvars);

}  // namespace matord

#endif
