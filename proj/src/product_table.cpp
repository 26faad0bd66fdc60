#include "product_table.hpp"

namespace matord::detail {

namespace {

constexpr std::int64_t kSafeLimit = std::int64_t{1} << 62;

/* Scales one matrix row to coprime integers with a positive factor.
 * Returns false when any entry, or |entry| * max_degree, leaves the safe
 * int64 range. */
bool scale_row(const Matrix& a, int r, long long max_degree, std::vector<std::int64_t>& out) {
  mpz_class l = 1;
  for (int c = 0; c < a.cols(); ++c)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(r, c).den().get_mpz_t());
  std::vector<mpz_class> scaled(a.cols());
  mpz_class g = 0;
  for (int c = 0; c < a.cols(); ++c) {
    scaled[c] = a.at(r, c).num() * (l / a.at(r, c).den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled[c].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : scaled) x /= g;
  for (int c = 0; c < a.cols(); ++c) {
    if (!scaled[c].fits_slong_p()) return false;
    long v = scaled[c].get_si();
    std::int64_t mag = v < 0 ? -static_cast<std::int64_t>(v) : v;
    if (max_degree > 0 && mag > kSafeLimit / max_degree) return false;
    out[c] = v;
  }
  return true;
}

}  // namespace

ProductTable::ProductTable(const Matrix& a, long long max_degree)
    : a_(a), rows_(static_cast<size_t>(a.rows())) {
  scaled_.assign(rows_, std::vector<std::int64_t>(a.cols()));
  fast_ = true;
  for (int r = 0; r < a.rows() && fast_; ++r)
    fast_ = scale_row(a_, r, max_degree, scaled_[static_cast<size_t>(r)]);
  if (!fast_) scaled_.clear();
}

void ProductTable::append(const Monomial& m) {
  const auto& e = m.exponents();
  if (fast_) {
    for (size_t r = 0; r < rows_; ++r) {
      std::int64_t acc = 0;
      const auto& row = scaled_[r];
      for (size_t c = 0; c < row.size(); ++c) acc += row[c] * e[c];
      fastv_.push_back(acc);
    }
  } else {
    auto prod = mat_vec(a_, e);
    for (size_t r = 0; r < rows_; ++r) exactv_.push_back(std::move(prod[r]));
  }
  ++count_;
}

}  // namespace matord::detail
