#include "pair_search.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "product_table.hpp"

namespace matord::detail {

namespace {

[[noreturn]] void tie_violation() {
  throw std::logic_error("pair search: distinct monomials compared equal; matrix is not a valid order");
}

}  // namespace

std::optional<std::pair<Monomial, Monomial>> first_table_disagreement(
    const Matrix& a, const Matrix& b, int enum_nvars, int d,
    const MonomialMap& lift_a, const MonomialMap& lift_b, const MonomialMap& report) {
  ProductTable ta(a, d);
  ProductTable tb(b, d);

  std::vector<Monomial> ms;          // all appended monomials, level by level
  std::vector<long long> deg;
  std::vector<size_t> by_a;          // indices sorted ascending under table a

  for (int level = 0; level <= d; ++level) {
    auto block = enumerate_monomials(enum_nvars, level, DegreeMode::Exactly);
    size_t base = ms.size();
    for (auto& m : block) {
      ta.append(lift_a(m));
      tb.append(lift_b(m));
      deg.push_back(m.degree());
      ms.push_back(std::move(m));
    }

    std::vector<size_t> fresh(ms.size() - base);
    for (size_t k = 0; k < fresh.size(); ++k) fresh[k] = base + k;
    std::sort(fresh.begin(), fresh.end(),
              [&](size_t i, size_t j) { return ta.cmp(i, j) < 0; });
    std::vector<size_t> merged(ms.size());
    std::merge(by_a.begin(), by_a.end(), fresh.begin(), fresh.end(), merged.begin(),
               [&](size_t i, size_t j) { return ta.cmp(i, j) < 0; });
    by_a = std::move(merged);

    bool clean = true;
    for (size_t k = 0; k + 1 < by_a.size(); ++k) {
      if (ta.cmp(by_a[k], by_a[k + 1]) == 0) tie_violation();
      int s = tb.cmp(by_a[k], by_a[k + 1]);
      if (s == 0) tie_violation();
      if (s > 0) { clean = false; break; }
    }
    if (clean) continue;

    // Some pair of this level disagrees (earlier levels were clean).  Find
    // the positionally first one.
    std::vector<size_t> pos(ms.size());
    for (size_t k = 0; k < pos.size(); ++k) pos[k] = k;
    std::sort(pos.begin(), pos.end(),
              [&](size_t i, size_t j) { return ms[i] < ms[j]; });
    std::vector<size_t> top_positions;  // positions in `pos` holding degree == level
    for (size_t k = 0; k < pos.size(); ++k)
      if (deg[pos[k]] == level) top_positions.push_back(k);

    for (size_t kp = 0; kp < pos.size(); ++kp) {
      size_t sp = pos[kp];
      auto check = [&](size_t sq) -> bool {
        int ca = ta.cmp(sp, sq), cb = tb.cmp(sp, sq);
        if (ca == 0 || cb == 0) tie_violation();
        return ca != cb;
      };
      if (deg[sp] == level) {
        for (size_t kq = kp + 1; kq < pos.size(); ++kq)
          if (check(pos[kq]))
            return std::make_pair(report(ms[sp]), report(ms[pos[kq]]));
      } else {
        auto it = std::upper_bound(top_positions.begin(), top_positions.end(), kp);
        for (; it != top_positions.end(); ++it)
          if (check(pos[*it]))
            return std::make_pair(report(ms[sp]), report(ms[pos[*it]]));
      }
    }
    throw std::logic_error("pair search: level precheck and scan disagree");
  }
  return std::nullopt;
}

std::optional<std::pair<Monomial, Monomial>> first_order_disagreement(
    const Matrix& a, const Matrix& b, int nvars, int d) {
  MonomialMap id = [](const Monomial& m) { return m; };
  return first_table_disagreement(a, b, nvars, d, id, id, id);
}

}  // namespace matord::detail
