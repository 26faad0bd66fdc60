#ifndef MATORD_SRC_PAIR_SEARCH_HPP
#define MATORD_SRC_PAIR_SEARCH_HPP

#include <functional>
#include <optional>
#include <utility>

#include "matord/matrix.hpp"
#include "matord/monomial.hpp"

namespace matord::detail {

/* The one pair-enumeration order every bounded search in this library uses,
 * so all reported witnesses are reproducible:
 *
 *   Pairs are visited level by level, the level of a pair being the larger
 *   of its two total degrees.  Within a level, the monomials of degree <=
 *   level are listed in ascending tuple order and pairs (p, q) with p before
 *   q are visited positionally, skipping pairs whose level is smaller (those
 *   belong to an earlier level).
 *
 * Both matrices must define monomial orders on the same variable count as
 * the enumerated monomials after lifting; distinct monomials then never
 * compare equal, which is checked, not assumed.
 *
 * Returns the first pair (built by `report` from the enumerated monomials)
 * on which the two matrices order the pair differently, or nullopt if they
 * agree on every pair up to degree d.
 *
 * A per-level shortcut keeps this near-linear on agreeing levels: sort the
 * level's monomials by matrix a and check that matrix b ascends along that
 * permutation; strict ascent everywhere is equivalent (by transitivity) to
 * agreement on every pair of the level, and the quadratic positional scan
 * runs only inside the first level that fails.
 *
 * `lift_a` / `lift_b` map each enumerated monomial to the argument fed to
 * the respective matrix (identity for plain two-order comparison; used by
 * the restriction check to compare an n-variable parent against an
 * (n-1)-variable induced matrix on aligned monomials). */
using MonomialMap = std::function<Monomial(const Monomial&)>;

std::optional<std::pair<Monomial, Monomial>> first_table_disagreement(
    const Matrix& a, const Matrix& b, int enum_nvars, int d,
    const MonomialMap& lift_a, const MonomialMap& lift_b, const MonomialMap& report);

// Plain two-order form: lifts and report are identities.
std::optional<std::pair<Monomial, Monomial>> first_order_disagreement(
    const Matrix& a, const Matrix& b, int nvars, int d);

}  // namespace matord::detail

#endif
