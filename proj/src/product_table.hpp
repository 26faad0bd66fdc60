#ifndef MATORD_SRC_PRODUCT_TABLE_HPP
#define MATORD_SRC_PRODUCT_TABLE_HPP

#include <cstdint>
#include <vector>

#include "matord/matrix.hpp"
#include "matord/monomial.hpp"

namespace matord::detail {

/* Cached matrix-vector products for a growing batch of monomials, used by
 * the bounded pair searches where the same products are compared against
 * each other millions of times.
 *
 * Fast path: each matrix row is scaled by the lcm of its denominators and
 * shrunk by the gcd of its entries.  The scale is positive, so the sign of
 * every per-row comparison is unchanged and lexicographic comparison of the
 * scaled product vectors equals the exact comparison.  The path is taken
 * only when max |scaled entry| * max_degree stays below 2^62, which bounds
 * every accumulated sum; otherwise products are cached as exact rationals.
 * Results are identical either way. */
class ProductTable {
 public:
  // max_degree: upper bound on the degree of every monomial ever appended.
  ProductTable(const Matrix& a, long long max_degree);

  void append(const Monomial& m);

  size_t size() const { return count_; }
  bool fast_path() const { return fast_; }

  // -1 / 0 / +1: product vector of entry i vs entry j, lexicographically.
  int cmp(size_t i, size_t j) const {
    if (fast_) {
      const std::int64_t* p = &fastv_[i * rows_];
      const std::int64_t* q = &fastv_[j * rows_];
      for (size_t r = 0; r < rows_; ++r)
        if (p[r] != q[r]) return p[r] < q[r] ? -1 : 1;
      return 0;
    }
    const Rational* p = &exactv_[i * rows_];
    const Rational* q = &exactv_[j * rows_];
    for (size_t r = 0; r < rows_; ++r) {
      int s = compare(p[r], q[r]);
      if (s != 0) return s;
    }
    return 0;
  }

 private:
  Matrix a_;
  size_t rows_;
  size_t count_ = 0;
  bool fast_;
  std::vector<std::vector<std::int64_t>> scaled_;  // fast path row images
  std::vector<std::int64_t> fastv_;
  std::vector<Rational> exactv_;
};

}  // namespace matord::detail

#endif
