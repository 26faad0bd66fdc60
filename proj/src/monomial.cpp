#include "matord/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace matord {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
  if (e_.empty()) throw std::invalid_argument("Monomial: needs at least one variable");
  for (int x : e_)
    if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
}

long long Monomial::degree() const {
  long long d = 0;
  for (int x : e_) d += x;
  return d;
}

Monomial Monomial::plus(const Monomial& o) const {
  if (o.nvars() != nvars()) throw std::invalid_argument("Monomial: arity mismatch");
  std::vector<int> s(e_);
  for (size_t i = 0; i < s.size(); ++i) s[i] += o.e_[i];
  return Monomial(std::move(s));
}

Monomial Monomial::without_variable(int i) const {
  if (nvars() < 2) throw std::invalid_argument("Monomial: cannot drop only variable");
  std::vector<int> s;
  s.reserve(e_.size() - 1);
  for (int c = 0; c < nvars(); ++c)
    if (c != i) s.push_back(e_[c]);
  return Monomial(std::move(s));
}

Monomial Monomial::with_zero_inserted(int i) const {
  std::vector<int> s;
  s.reserve(e_.size() + 1);
  for (int c = 0; c < nvars(); ++c) {
    if (c == i) s.push_back(0);
    s.push_back(e_[c]);
  }
  if (i == nvars()) s.push_back(0);
  return Monomial(std::move(s));
}

std::string Monomial::to_string() const {
  std::string out;
  for (int c = 0; c < nvars(); ++c) {
    if (c) out += ',';
    out += std::to_string(e_[c]);
  }
  return out;
}

namespace {

void emit_exact(int n, int d, std::vector<int>& prefix, std::vector<Monomial>& out) {
  if (static_cast<int>(prefix.size()) == n - 1) {
    prefix.push_back(d);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = 0; e <= d; ++e) {
    prefix.push_back(e);
    emit_exact(n, d - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> enumerate_monomials(int n, int d, DegreeMode mode) {
  if (n < 1 || d < 0) throw std::invalid_argument("enumerate_monomials: bad arguments");
  std::vector<Monomial> out;
  std::vector<int> prefix;
  if (mode == DegreeMode::Exactly) {
    emit_exact(n, d, prefix, out);
  } else {
    for (int dd = 0; dd <= d; ++dd) emit_exact(n, dd, prefix, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace matord
