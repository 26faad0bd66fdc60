#include "matord/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace matord {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (sgn(d) == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(n) / mpq_class(d);  // mpq division canonicalizes
}

Rational::Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(s, 10);
      return Rational(mpq_class(n));
    }
    mpz_class n(s.substr(0, slash), 10);
    mpz_class d(s.substr(slash + 1), 10);
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace matord
