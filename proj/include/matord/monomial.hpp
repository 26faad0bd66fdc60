#ifndef MATORD_MONOMIAL_HPP
#define MATORD_MONOMIAL_HPP

#include <compare>
#include <string>
#include <vector>

namespace matord {

/* Exponent vector of a monomial: nonnegative entries, length = variable
 * count >= 1.  Comparison operators below are plain tuple order (the
 * deterministic enumeration order), not a monomial order. */
class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);

  int nvars() const { return static_cast<int>(e_.size()); }
  long long degree() const;
  int operator[](int i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }

  Monomial plus(const Monomial& o) const;           // exponentwise sum
  Monomial without_variable(int i) const;           // drop 0-based coordinate
  Monomial with_zero_inserted(int i) const;         // inverse of the above

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.e_ <=> b.e_; }

  std::string to_string() const;  // "2,3,0"

 private:
  std::vector<int> e_;
};

enum class DegreeMode { Exactly, UpTo };

/* All exponent vectors with degree = d (Exactly) or <= d (UpTo), in
 * ascending tuple order.  Counts are C(n+d-1,d) resp. C(n+d,d). */
std::vector<Monomial> enumerate_monomials(int n, int d, DegreeMode mode);

}  // namespace matord

#endif
