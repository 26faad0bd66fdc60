#include "matord/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace matord {

const char* to_token(Comparison c) {
  switch (c) {
    case Comparison::Less: return "LT";
    case Comparison::Equal: return "EQ";
    case Comparison::Greater: return "GT";
  }
  return "?";
}

std::string ValidationError::message() const {
  if (kind == Kind::RankDeficient) return "RankDeficient";
  return "BadColumnSign(" + std::to_string(column) + ")";
}

std::variant<MonomialOrder, ValidationError> MonomialOrder::validate(Matrix a) {
  if (rank(a) < a.cols())
    return ValidationError{ValidationError::Kind::RankDeficient, 0};
  for (int c = 0; c < a.cols(); ++c) {
    for (int r = 0; r < a.rows(); ++r) {
      int s = a.at(r, c).sign();
      if (s == 0) continue;
      if (s < 0) return ValidationError{ValidationError::Kind::BadColumnSign, c + 1};
      break;
    }
    // A zero column cannot reach here: it would already be rank-deficient.
  }
  return MonomialOrder(std::move(a));
}

MonomialOrder MonomialOrder::require(Matrix a) {
  auto v = validate(std::move(a));
  if (auto* err = std::get_if<ValidationError>(&v))
    throw std::logic_error("MonomialOrder::require: " + err->message());
  return std::get<MonomialOrder>(std::move(v));
}

Comparison MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != nvars() || b.nvars() != nvars())
    throw std::invalid_argument("compare: arity mismatch");
  if (a == b) return Comparison::Equal;
  for (int r = 0; r < a_.rows(); ++r) {
    Rational pa, pb;
    for (int c = 0; c < a_.cols(); ++c) {
      if (a[c]) pa += a_.at(r, c) * Rational(a[c]);
      if (b[c]) pb += a_.at(r, c) * Rational(b[c]);
    }
    int s = cmp(pa.raw(), pb.raw());
    if (s < 0) return Comparison::Less;
    if (s > 0) return Comparison::Greater;
  }
  // Distinct monomials with equal product vectors would mean a kernel
  // vector, which validation excluded.
  throw std::logic_error("compare: distinct monomials tied; validation violated");
}

MonomialOrder classic_order(ClassicKind kind, int n) {
  if (n < 1) throw std::invalid_argument("classic_order: n must be >= 1");
  Matrix m(n, n);
  switch (kind) {
    case ClassicKind::Lex:
      m = Matrix::identity(n);
      break;
    case ClassicKind::Deglex:
      for (int c = 0; c < n; ++c) m.at(0, c) = Rational(1);
      for (int r = 1; r < n; ++r) m.at(r, r - 1) = Rational(1);
      break;
    case ClassicKind::Revlex:
      for (int c = 0; c < n; ++c) m.at(0, c) = Rational(1);
      // Row r (0-based, r >= 1) has -1 at column n - r.
      for (int r = 1; r < n; ++r) m.at(r, n - r) = Rational(-1);
      break;
  }
  return MonomialOrder::require(std::move(m));
}

const char* classic_name(ClassicKind kind) {
  switch (kind) {
    case ClassicKind::Lex: return "lex";
    case ClassicKind::Deglex: return "deglex";
    case ClassicKind::Revlex: return "revlex";
  }
  return "?";
}

std::vector<Monomial> sort_monomials(const MonomialOrder& o, std::vector<Monomial> ms) {
  std::stable_sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) {
    return o.compare(a, b) == Comparison::Less;
  });
  return ms;
}

}  // namespace matord
