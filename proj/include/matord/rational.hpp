#ifndef MATORD_RATIONAL_HPP
#define MATORD_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace matord {

/* Arbitrary-precision rational in canonical form: reduced, denominator > 0,
 * zero stored as 0/1.  Every constructor canonicalizes, so any two equal
 * values are bit-identical.  Arithmetic is exact; there is no rounding
 * anywhere in this library. */
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d);
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(const mpq_class& q);

  // Accepts "p", "-p", "p/q" in decimal. Throws std::invalid_argument.
  static Rational from_string(const std::string& s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);  // throws on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // -1, 0, +1 of a - b without building the difference.
  friend int compare(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_); }

  // "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;  // invariant: canonical (GMP ops preserve this)
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace matord

#endif
