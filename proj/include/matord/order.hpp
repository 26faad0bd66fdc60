#ifndef MATORD_ORDER_HPP
#define MATORD_ORDER_HPP

#include <string>
#include <variant>
#include <vector>

#include "matord/matrix.hpp"
#include "matord/monomial.hpp"

namespace matord {

enum class Comparison { Less, Equal, Greater };

const char* to_token(Comparison c);  // "LT" / "EQ" / "GT"

/* Why a matrix fails to define a monomial order.  RankDeficient: the columns
 * are dependent over the rationals, so some nonzero integer vector maps to
 * zero and two distinct monomials would tie.  BadColumnSign: the first
 * nonzero entry of the named column (1-based) is negative, so that variable
 * would sort below 1. */
struct ValidationError {
  enum class Kind { RankDeficient, BadColumnSign };
  Kind kind;
  int column = 0;  // 1-based, set for BadColumnSign

  std::string message() const;
};

/* A matrix that passed validation, together with comparison by lexicographic
 * order of matrix-vector products.  Instances can only be built through
 * validate(), so an invalid matrix cannot inhabit this type.  Rank equal to
 * the column count is the decidable rational form of "no nonzero integer
 * vector in the kernel". */
class MonomialOrder {
 public:
  static std::variant<MonomialOrder, ValidationError> validate(Matrix a);

  // For matrices known valid by construction; throws std::logic_error if not.
  static MonomialOrder require(Matrix a);

  const Matrix& matrix() const { return a_; }
  int nvars() const { return a_.cols(); }

  /* Less iff A*a precedes A*b lexicographically.  Equal only for a == b:
   * full column rank makes any other tie impossible, and that is asserted
   * here rather than assumed. */
  Comparison compare(const Monomial& a, const Monomial& b) const;

 private:
  explicit MonomialOrder(Matrix a) : a_(std::move(a)) {}
  Matrix a_;
};

enum class ClassicKind { Lex, Deglex, Revlex };

/* The three classic orders as n x n matrices: lex is the identity; deglex is
 * the all-ones row over a shifted identity; revlex is the all-ones row over
 * -1 entries on the anti-diagonal, filled bottom-up. */
MonomialOrder classic_order(ClassicKind kind, int n);

const char* classic_name(ClassicKind kind);

// Ascending by o, stable, a permutation of the input.
std::vector<Monomial> sort_monomials(const MonomialOrder& o, std::vector<Monomial> ms);

}  // namespace matord

#endif
