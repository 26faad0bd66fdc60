#ifndef MATORD_FAMILIES_HPP
#define MATORD_FAMILIES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matord/equivalence.hpp"
#include "matord/induced.hpp"
#include "matord/order.hpp"

namespace matord {

/* Two families of n x n integer order matrices, defined for n >= 4.  They
 * share every row except the weight row (row n-1): all ones on top, a block
 * of rows with a 1 in column 1 and a 1 on the diagonal, the weight row, and
 * e_n at the bottom.  C's weight row is ((n^2+n+2)/2, n-1, n-2, ..., 2, 1);
 * D's is ((n^2-n)/2, n-1, ..., 4, 2, 3, 1), i.e. C's with the leading entry
 * replaced and the values at columns n-2 and n-1 swapped. */
enum class Family { C, D };

const char* family_name(Family f);  // "C" / "D"

// Throws std::invalid_argument for n < 4 (the middle row block needs it).
Matrix family_matrix(Family f, int n);

// The validated order; family matrices are valid for every n >= 4.
MonomialOrder build_family(Family f, int n);

/* One variable's slice of verify_families: the two induced orders, their
 * equivalence verdict, and their determinants against the expected closed
 * forms.  Closed-form agreement is recorded, never asserted: for the D
 * family the expected forms at i = n-1 and i = n disagree with direct
 * computation, and the report keeps both sides visible. */
struct InducedPairCheck {
  int variable = 0;                 // removed variable, 1-based
  int deleted_row_c = 0;            // 1-based row dropped by the induced construction
  int deleted_row_d = 0;
  EquivalenceVerdict verdict = UndeterminedUpTo{0};  // of the two induced orders
  Rational det_c, det_d;            // determinants of the induced matrices
  Rational expected_c, expected_d;  // closed-form values for this variable
  bool match_c = false, match_d = false;
  bool certified = false;           // verdict holds an Equivalent certificate
};

/* End-to-end check that C_n and D_n are distinct orders whose n induced
 * orderings all coincide.  Self-certifying: the witness pair comes with all
 * four matrix-vector products, and each certificate sits inside its verdict. */
struct FamilyVerification {
  int n = 0;
  int requested_bound = 0;  // caller's degree bound, passed to equivalent()
  int witness_bound = 0;    // bound used for the distinctness search (see below)
  bool valid_c = false, valid_d = false;
  Rational det_c, det_d;
  Rational expected_det_c, expected_det_d;
  bool det_c_match = false, det_d_match = false;
  std::optional<std::pair<Monomial, Monomial>> witness;  // first disagreeing pair
  // A*witness products, row by row: the disagreement is visible by eye.
  std::vector<Rational> products_c_first, products_c_second;
  std::vector<Rational> products_d_first, products_d_second;
  std::vector<InducedPairCheck> induced;  // one entry per variable, i ascending
  bool distinct_confirmed = false;   // witness found and re-checked by compare()
  bool all_induced_equivalent = false;
  bool ok = false;  // validity + distinctness + all induced equivalences
};

/* The distinctness search runs to max(d, 2n), not d: the first level where
 * the families disagree grows like (3n-4)/2 and stays below 2n, so the
 * raised bound always reaches it, while a literal small d would wrongly
 * report agreement for n >= 6.  requested_bound / witness_bound record both
 * numbers. */
FamilyVerification verify_families(int n, int d);

/* One determinant quantity of the table: either a full family determinant or
 * a group of minors (delete column i and the last row) sharing one
 * closed-form pattern.  `computed` and `expected` align index by index with
 * `indices` (empty for the full determinants). */
struct DetEntry {
  std::string label;
  std::vector<int> indices;        // the i values covered, 1-based
  std::vector<Rational> computed;
  std::vector<Rational> expected;
  bool matches = false;  // computed == expected throughout the group
  bool nonzero = false;  // no computed value is zero
};

struct DetRow {
  int n = 0;
  std::vector<DetEntry> entries;  // full dets first, then C minors, then D minors
  bool all_nonzero = false;       // the assertable property
  bool all_match = false;         // informational; false for the D family
};

// Requires 4 <= n_min <= n_max.
std::vector<DetRow> determinant_report(int n_min, int n_max);

/* Chain checking for the hand proof that lex and revlex are pinned down by
 * their induced orderings.  Each case of that proof reduces a comparison to
 * a short chain of comparisons, every link of which holds two coordinates
 * equal and is therefore decided by one induced order.  For each case this
 * instantiates random exponent vectors satisfying the case's hypotheses
 * (plus fixed boundary instances, including the equality edges of the
 * non-strict links) and evaluates every link against the induced orders
 * actually constructed by induced_matrix. */
struct ChainLinkFailure {
  std::string case_name;
  Monomial alpha, beta;     // the instantiated pair
  int link = 0;             // 0 = the full-order claim itself, then 1, 2, ...
  int variable = 0;         // induced order used; 0 for the full-order claim
  Monomial x, y;            // the link's operands, full arity
  Comparison expected = Comparison::Less;
  Comparison actual = Comparison::Less;
};

struct ChainCaseReport {
  std::string name;
  bool feasible = false;  // sampling possible at this (n, d)
  int sampled = 0;        // random instantiations fully checked
  int boundary = 0;       // fixed instantiations fully checked
};

struct ChainReport {
  int n = 0, d = 0, samples = 0;
  std::vector<ChainCaseReport> cases;  // all seven, in fixed order
  std::optional<ChainLinkFailure> failure;
  bool pass = false;
};

/* Requires n >= 4, d >= 1, samples >= 0.  Deterministic for fixed
 * arguments.  Stops at the first failing link. */
ChainReport induction_chain_check(int n, int d, int samples);

}  // namespace matord

#endif
