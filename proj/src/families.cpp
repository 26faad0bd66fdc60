#include "matord/families.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <variant>

namespace matord {

namespace {

long weight_lead(Family f, int n) {
  long nn = n;
  return f == Family::C ? (nn * nn + nn + 2) / 2 : (nn * nn - nn) / 2;
}

/* Expected closed form for the minor at variable i (delete column i, last
 * row).  Four groups per family: i = 1, 2 <= i <= n-2, i = n-1, i = n. */
Rational expected_minor(Family f, int n, int i) {
  long base;
  if (i == 1) {
    base = (n % 2 == 0) ? 1 : -1;
  } else if (i <= n - 2) {
    base = ((n + i) % 2 == 0) ? 1 : -1;
  } else if (i == n - 1) {
    return Rational(f == Family::C ? -2L * n : -1L - 2 * n);
  } else {
    return Rational(f == Family::C ? 4L - 3 * n : 5L - 2 * n);
  }
  return Rational(f == Family::C ? base : 2 * base);
}

Rational expected_full(Family f, int n) {
  return Rational(f == Family::C ? 4L - 3 * n : 5L - 2 * n);
}

}  // namespace

const char* family_name(Family f) { return f == Family::C ? "C" : "D"; }

Matrix family_matrix(Family f, int n) {
  if (n < 4) throw std::invalid_argument("family_matrix: needs n >= 4");
  Matrix m(n, n);
  for (int c = 0; c < n; ++c) m.at(0, c) = Rational(1);
  for (int r = 1; r <= n - 3; ++r) {
    m.at(r, 0) = Rational(1);
    m.at(r, r) = Rational(1);
  }
  m.at(n - 2, 0) = Rational(weight_lead(f, n));
  for (int c = 1; c < n; ++c) m.at(n - 2, c) = Rational(long(n - c));
  if (f == Family::D) {
    m.at(n - 2, n - 3) = Rational(2);
    m.at(n - 2, n - 2) = Rational(3);
  }
  m.at(n - 1, n - 1) = Rational(1);
  return m;
}

MonomialOrder build_family(Family f, int n) {
  return MonomialOrder::require(family_matrix(f, n));
}

FamilyVerification verify_families(int n, int d) {
  if (n < 4) throw std::invalid_argument("verify_families: needs n >= 4");
  if (d < 0) throw std::invalid_argument("verify_families: negative bound");

  FamilyVerification v;
  v.n = n;
  v.requested_bound = d;
  v.witness_bound = std::max(d, 2 * n);

  Matrix mc = family_matrix(Family::C, n);
  Matrix md = family_matrix(Family::D, n);
  v.valid_c = std::holds_alternative<MonomialOrder>(MonomialOrder::validate(mc));
  v.valid_d = std::holds_alternative<MonomialOrder>(MonomialOrder::validate(md));
  MonomialOrder oc = MonomialOrder::require(mc);
  MonomialOrder od = MonomialOrder::require(md);

  v.det_c = determinant(mc);
  v.det_d = determinant(md);
  v.expected_det_c = expected_full(Family::C, n);
  v.expected_det_d = expected_full(Family::D, n);
  v.det_c_match = v.det_c == v.expected_det_c;
  v.det_d_match = v.det_d == v.expected_det_d;

  v.witness = distinguishing_pair(oc, od, v.witness_bound);
  if (v.witness) {
    const Monomial& a = v.witness->first;
    const Monomial& b = v.witness->second;
    v.products_c_first = mat_vec(mc, a.exponents());
    v.products_c_second = mat_vec(mc, b.exponents());
    v.products_d_first = mat_vec(md, a.exponents());
    v.products_d_second = mat_vec(md, b.exponents());
    Comparison cc = oc.compare(a, b);
    Comparison cd = od.compare(a, b);
    v.distinct_confirmed =
        (cc == Comparison::Less && cd == Comparison::Greater) ||
        (cc == Comparison::Greater && cd == Comparison::Less);
  }

  v.all_induced_equivalent = true;
  for (int i = 1; i <= n; ++i) {
    InducedPairCheck chk;
    chk.variable = i;
    InducedResult ic = induced_matrix(oc, i);
    InducedResult id = induced_matrix(od, i);
    chk.deleted_row_c = ic.deleted_row;
    chk.deleted_row_d = id.deleted_row;
    chk.det_c = determinant(ic.order.matrix());
    chk.det_d = determinant(id.order.matrix());
    chk.expected_c = expected_minor(Family::C, n, i);
    chk.expected_d = expected_minor(Family::D, n, i);
    chk.match_c = chk.det_c == chk.expected_c;
    chk.match_d = chk.det_d == chk.expected_d;
    chk.verdict = equivalent(ic.order, id.order, d);
    chk.certified = std::holds_alternative<Equivalent>(chk.verdict);
    if (!chk.certified) v.all_induced_equivalent = false;
    v.induced.push_back(std::move(chk));
  }

  v.ok = v.valid_c && v.valid_d && v.distinct_confirmed && v.all_induced_equivalent;
  return v;
}

std::vector<DetRow> determinant_report(int n_min, int n_max) {
  if (n_min < 4 || n_min > n_max)
    throw std::invalid_argument("determinant_report: needs 4 <= n_min <= n_max");

  std::vector<DetRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    DetRow row;
    row.n = n;
    row.all_nonzero = true;
    row.all_match = true;

    auto push = [&](std::string label, std::vector<int> indices,
                    std::vector<Rational> computed, std::vector<Rational> expected) {
      DetEntry e;
      e.label = std::move(label);
      e.indices = std::move(indices);
      e.computed = std::move(computed);
      e.expected = std::move(expected);
      e.matches = e.computed == e.expected;
      e.nonzero = std::none_of(e.computed.begin(), e.computed.end(),
                               [](const Rational& r) { return r.is_zero(); });
      row.all_nonzero = row.all_nonzero && e.nonzero;
      row.all_match = row.all_match && e.matches;
      row.entries.push_back(std::move(e));
    };

    for (Family f : {Family::C, Family::D}) {
      const std::string fn = family_name(f);
      Matrix m = family_matrix(f, n);
      push("det " + fn, {}, {determinant(m)}, {expected_full(f, n)});

      auto minor_det = [&](int i) { return determinant(m.without_column(i - 1).without_row(n - 1)); };
      auto group = [&](std::string label, int from, int to) {
        std::vector<int> idx;
        std::vector<Rational> comp, exp;
        for (int i = from; i <= to; ++i) {
          idx.push_back(i);
          comp.push_back(minor_det(i));
          exp.push_back(expected_minor(f, n, i));
        }
        push(std::move(label), std::move(idx), std::move(comp), std::move(exp));
      };
      group("det " + fn + " minor i=1", 1, 1);
      group("det " + fn + " minor 2<=i<=n-2", 2, n - 2);
      group("det " + fn + " minor i=n-1", n - 1, n - 1);
      group("det " + fn + " minor i=n", n, n);
    }

    // Interleave to the C-block-then-D-block order promised by the header.
    std::vector<DetEntry> reordered;
    reordered.push_back(std::move(row.entries[0]));  // det C
    reordered.push_back(std::move(row.entries[5]));  // det D
    for (int k = 1; k <= 4; ++k) reordered.push_back(std::move(row.entries[k]));
    for (int k = 6; k <= 9; ++k) reordered.push_back(std::move(row.entries[k]));
    row.entries = std::move(reordered);

    rows.push_back(std::move(row));
  }
  return rows;
}

/* ---- chain checking ------------------------------------------------- */

namespace {

// Bounded draw with plain modulo; bias is irrelevant here and this keeps the
// stream identical across standard libraries, unlike the distribution types.
int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/* Random exponent vector of total degree d whose support is exactly
 * `support` (0-based positions): one unit to each position, remainder spread
 * at random.  Requires |support| <= d (and a nonempty support when d > 0). */
std::vector<int> random_composition(std::mt19937_64& rng, int n, int d,
                                    const std::vector<int>& support) {
  std::vector<int> v(n, 0);
  int rest = d;
  for (int p : support) {
    v[p] += 1;
    rest -= 1;
  }
  for (int t = 0; t < rest; ++t) v[support[static_cast<size_t>(draw(rng, 0, static_cast<int>(support.size()) - 1))]] += 1;
  return v;
}

// m distinct elements of pool, chosen by partial Fisher-Yates.
std::vector<int> pick_subset(std::mt19937_64& rng, std::vector<int> pool, int m) {
  for (int t = 0; t < m; ++t) std::swap(pool[t], pool[draw(rng, t, static_cast<int>(pool.size()) - 1)]);
  pool.resize(m);
  return pool;
}

Monomial unit_vector(int n, int pos0, int value) {
  std::vector<int> v(n, 0);
  v[pos0] = value;
  return Monomial(std::move(v));
}

Monomial zero_prefix(const Monomial& m, int count) {
  std::vector<int> v = m.exponents();
  for (int i = 0; i < count; ++i) v[i] = 0;
  return Monomial(std::move(v));
}

struct Link {
  int variable;  // 1-based
  Monomial x, y;
};

struct Instantiation {
  Monomial alpha, beta;
  std::vector<Link> links;
};

/* Support split for the two-sided revlex cases: forced positions on each
 * side, the rest split at random subject to both supports fitting inside the
 * degree.  nullopt when no split fits. */
std::optional<std::pair<std::vector<int>, std::vector<int>>> split_supports(
    std::mt19937_64& rng, const std::vector<int>& free_positions,
    std::vector<int> side_a, std::vector<int> side_b, int d) {
  const int nf = static_cast<int>(free_positions.size());
  const int lo = std::max(0, nf - (d - static_cast<int>(side_a.size())));
  const int hi = std::min(nf, d - static_cast<int>(side_b.size()));
  if (lo > hi) return std::nullopt;
  const int mb = draw(rng, lo, hi);
  std::vector<int> to_b = pick_subset(rng, free_positions, mb);
  std::sort(to_b.begin(), to_b.end());
  for (int p : free_positions) {
    if (std::binary_search(to_b.begin(), to_b.end(), p)) side_b.push_back(p);
    else side_a.push_back(p);
  }
  return std::make_pair(std::move(side_a), std::move(side_b));
}

/* Builders: one per proof case.  Each returns the instantiated pair plus its
 * chain links, or nullopt when the case cannot be instantiated at (n, d).
 * Link operands keep full arity; the link variable's coordinate is equal on
 * both sides by construction. */

Instantiation lex_later_links(int n, Monomial alpha, Monomial beta, int k1) {
  Instantiation inst{alpha, beta, {}};
  inst.links.push_back({1, zero_prefix(alpha, k1 - 1), zero_prefix(beta, k1 - 1)});
  (void)n;
  return inst;
}

std::optional<Instantiation> sample_lex_later(std::mt19937_64& rng, int n, int d) {
  const int k1 = draw(rng, 2, n);
  const int dp = draw(rng, 0, d - 1);
  std::vector<int> prefix_pos(k1 - 1);
  std::iota(prefix_pos.begin(), prefix_pos.end(), 0);
  std::vector<int> a = dp > 0 && k1 > 1
                           ? random_composition(rng, n, dp, pick_subset(rng, prefix_pos, std::min<int>(dp, k1 - 1)))
                           : std::vector<int>(n, 0);
  std::vector<int> b = a;
  const int ak = draw(rng, 0, d - dp - 1);
  const int bk = draw(rng, ak + 1, d - dp);
  a[k1 - 1] = ak;
  b[k1 - 1] = bk;
  if (k1 < n) {
    std::vector<int> tail_pos(n - k1);
    std::iota(tail_pos.begin(), tail_pos.end(), k1);
    const int ta = draw(rng, 0, d - dp - ak);
    const int tb = draw(rng, 0, d - dp - bk);
    if (ta > 0) {
      std::vector<int> sup = pick_subset(rng, tail_pos, std::min(ta, n - k1));
      std::vector<int> t = random_composition(rng, n, ta, sup);
      for (int i = k1; i < n; ++i) a[i] = t[i];
    }
    if (tb > 0) {
      std::vector<int> sup = pick_subset(rng, tail_pos, std::min(tb, n - k1));
      std::vector<int> t = random_composition(rng, n, tb, sup);
      for (int i = k1; i < n; ++i) b[i] = t[i];
    }
  }
  return lex_later_links(n, Monomial(std::move(a)), Monomial(std::move(b)), k1);
}

Instantiation lex_first_links(int n, Monomial alpha, Monomial beta) {
  std::vector<int> m1(n, 0), m2(n, 0);
  m1[0] = alpha[0];
  for (int i = 1; i < n; ++i) m1[1] += alpha[i];
  m2[0] = beta[0];
  Monomial mid1(std::move(m1)), mid2(std::move(m2));
  Instantiation inst{alpha, beta, {}};
  inst.links.push_back({1, alpha, mid1});
  inst.links.push_back({n, mid1, mid2});
  inst.links.push_back({1, mid2, beta});
  return inst;
}

std::optional<Instantiation> sample_lex_first(std::mt19937_64& rng, int n, int d) {
  const int a1 = draw(rng, 0, d - 1);
  const int b1 = draw(rng, a1 + 1, d);
  std::vector<int> a(n, 0), b(n, 0);
  a[0] = a1;
  b[0] = b1;
  std::vector<int> tail_pos(n - 1);
  std::iota(tail_pos.begin(), tail_pos.end(), 1);
  const int ta = draw(rng, 0, d - a1);
  const int tb = draw(rng, 0, d - b1);
  if (ta > 0) {
    std::vector<int> t = random_composition(rng, n, ta, pick_subset(rng, tail_pos, std::min(ta, n - 1)));
    for (int i = 1; i < n; ++i) a[i] = t[i];
  }
  if (tb > 0) {
    std::vector<int> t = random_composition(rng, n, tb, pick_subset(rng, tail_pos, std::min(tb, n - 1)));
    for (int i = 1; i < n; ++i) b[i] = t[i];
  }
  return lex_first_links(n, Monomial(std::move(a)), Monomial(std::move(b)));
}

Instantiation beta_ends_early_links(int n, int d, Monomial alpha, Monomial beta, int k1) {
  Monomial p = unit_vector(n, n - 2, d);
  Monomial q = unit_vector(n, k1 - 1, d);
  Instantiation inst{alpha, beta, {}};
  inst.links.push_back({k1, alpha, p});
  inst.links.push_back({n, p, q});
  inst.links.push_back({n, q, beta});
  return inst;
}

std::optional<Instantiation> sample_beta_ends_early(std::mt19937_64& rng, int n, int d) {
  std::vector<int> valid_k;
  for (int k1 = 1; k1 <= n - 2; ++k1) {
    const int nf = k1 - 1;
    const int forced_a = n - k1;  // positions k1+1..n
    if (forced_a > d) continue;
    if (std::max(0, nf - (d - forced_a)) <= std::min(nf, d - 1)) valid_k.push_back(k1);
  }
  if (valid_k.empty()) return std::nullopt;
  const int k1 = valid_k[static_cast<size_t>(draw(rng, 0, static_cast<int>(valid_k.size()) - 1))];
  std::vector<int> free_pos(k1 - 1);
  std::iota(free_pos.begin(), free_pos.end(), 0);
  std::vector<int> side_a, side_b{k1 - 1};
  for (int p = k1; p < n; ++p) side_a.push_back(p);
  auto split = split_supports(rng, free_pos, side_a, side_b, d);
  if (!split) return std::nullopt;
  Monomial alpha(random_composition(rng, n, d, split->first));
  Monomial beta(random_composition(rng, n, d, split->second));
  return beta_ends_early_links(n, d, alpha, beta, k1);
}

Instantiation alpha_full_links(int n, int d, Monomial alpha) {
  std::vector<int> m(n, 0);
  m[0] = alpha[0] + alpha[n - 3];
  for (int i = 1; i <= n - 4; ++i) m[i] = alpha[i];
  m[n - 1] = alpha[n - 1];
  Monomial mid(std::move(m));
  Monomial beta = unit_vector(n, n - 2, d);
  Instantiation inst{alpha, beta, {}};
  inst.links.push_back({n - 1, alpha, mid});
  inst.links.push_back({n - 2, mid, beta});
  return inst;
}

std::optional<Instantiation> sample_alpha_full(std::mt19937_64& rng, int n, int d) {
  if (d < n - 1) return std::nullopt;
  std::vector<int> support;
  for (int p = 0; p <= n - 3; ++p) support.push_back(p);
  support.push_back(n - 1);
  return alpha_full_links(n, d, Monomial(random_composition(rng, n, d, support)));
}

Instantiation alpha_top_only_links(int n, int d, Monomial beta) {
  Monomial alpha = unit_vector(n, n - 1, d);
  Monomial p = unit_vector(n, n - 2, d);
  Instantiation inst{alpha, beta, {}};
  inst.links.push_back({1, alpha, p});
  inst.links.push_back({n, p, beta});
  return inst;
}

std::optional<Instantiation> sample_alpha_top_only(std::mt19937_64& rng, int n, int d) {
  if (d < n - 1) return std::nullopt;
  std::vector<int> support(n - 1);
  std::iota(support.begin(), support.end(), 0);
  return alpha_top_only_links(n, d, Monomial(random_composition(rng, n, d, support)));
}

Instantiation two_link_instantiation(int n, int d, Monomial alpha, Monomial beta, int first_var) {
  Monomial p = unit_vector(n, n - 2, d);
  Instantiation inst{alpha, beta, {}};
  inst.links.push_back({first_var, alpha, p});
  inst.links.push_back({n, p, beta});
  return inst;
}

std::optional<Instantiation> sample_gap_at_second_top(std::mt19937_64& rng, int n, int d) {
  const int l1 = draw(rng, 1, n - 3);
  std::vector<int> free_pos;
  for (int p = 0; p <= n - 4; ++p)
    if (p != l1 - 1) free_pos.push_back(p);
  auto split = split_supports(rng, free_pos, {l1 - 1, n - 1}, {n - 3, n - 2}, d);
  if (!split) return std::nullopt;
  Monomial alpha(random_composition(rng, n, d, split->first));
  Monomial beta(random_composition(rng, n, d, split->second));
  return two_link_instantiation(n, d, alpha, beta, n - 2);
}

std::optional<Instantiation> sample_hole_below(std::mt19937_64& rng, int n, int d) {
  const int l1 = draw(rng, 1, n - 3);
  std::vector<int> free_pos;
  for (int p = 0; p <= n - 4; ++p)
    if (p != l1 - 1) free_pos.push_back(p);
  auto split = split_supports(rng, free_pos, {n - 3, n - 1}, {l1 - 1, n - 2}, d);
  if (!split) return std::nullopt;
  Monomial alpha(random_composition(rng, n, d, split->first));
  Monomial beta(random_composition(rng, n, d, split->second));
  return two_link_instantiation(n, d, alpha, beta, l1);
}

// Exponent vector with value 1 on `ones` and `rest` dumped on position `at`.
std::vector<int> spread(int n, const std::vector<int>& ones, int at, int rest) {
  std::vector<int> v(n, 0);
  for (int p : ones) v[p] = 1;
  v[at] += rest;
  return v;
}

std::vector<Instantiation> boundaries(const std::string& name, int n, int d) {
  std::vector<Instantiation> out;
  if (name == "lex_later_difference") {
    if (d >= 2) {
      std::vector<int> a(n, 0), b(n, 0);
      a[0] = 1;
      a[n - 1] = 1;
      b[0] = 1;
      b[1] = 1;
      out.push_back(lex_later_links(n, Monomial(std::move(a)), Monomial(std::move(b)), 2));
    }
  } else if (name == "lex_first_difference") {
    if (d >= 3) {
      std::vector<int> a(n, 0), b(n, 0);
      a[0] = 1;
      a[1] = 2;
      b[0] = 2;
      b[n - 1] = 1;
      out.push_back(lex_first_links(n, Monomial(std::move(a)), Monomial(std::move(b))));
    }
    if (d >= 2) {
      // Both weak links collapse to equality here.
      out.push_back(lex_first_links(n, unit_vector(n, 0, 1), unit_vector(n, 0, 2)));
    }
  } else if (name == "revlex_beta_ends_early") {
    if (d >= n - 1) {
      // k = 1 with beta a pure power: the last link collapses to equality.
      std::vector<int> ap;
      for (int p = 1; p < n; ++p) ap.push_back(p);
      out.push_back(beta_ends_early_links(
          n, d, Monomial(spread(n, ap, n - 1, d - (n - 1))), unit_vector(n, 0, d), 1));
    }
  } else if (name == "revlex_alpha_full") {
    if (d >= n - 1) {
      std::vector<int> sup;
      for (int p = 0; p <= n - 3; ++p) sup.push_back(p);
      sup.push_back(n - 1);
      out.push_back(alpha_full_links(n, d, Monomial(spread(n, sup, n - 1, d - (n - 1)))));
      out.push_back(alpha_full_links(n, d, Monomial(spread(n, sup, 0, d - (n - 1)))));
    }
  } else if (name == "revlex_alpha_top_only") {
    if (d >= n - 1) {
      std::vector<int> sup;
      for (int p = 0; p <= n - 2; ++p) sup.push_back(p);
      out.push_back(alpha_top_only_links(n, d, Monomial(spread(n, sup, n - 2, d - (n - 1)))));
    }
    // Equality edge: beta equal to the chain's middle vector.
    out.push_back(alpha_top_only_links(n, d, unit_vector(n, n - 2, d)));
  } else if (name == "revlex_gap_at_second_top") {
    if (d >= 2) {
      out.push_back(two_link_instantiation(n, d, Monomial(spread(n, {0}, n - 1, d - 1)),
                                           Monomial(spread(n, {n - 3}, n - 2, d - 1)), n - 2));
    }
  } else if (name == "revlex_hole_below") {
    if (d >= 2) {
      out.push_back(two_link_instantiation(n, d, Monomial(spread(n, {n - 3}, n - 1, d - 1)),
                                           Monomial(spread(n, {0}, n - 2, d - 1)), 1));
    }
  }
  return out;
}

}  // namespace

ChainReport induction_chain_check(int n, int d, int samples) {
  if (n < 4) throw std::invalid_argument("induction_chain_check: needs n >= 4");
  if (d < 1) throw std::invalid_argument("induction_chain_check: needs d >= 1");
  if (samples < 0) throw std::invalid_argument("induction_chain_check: negative samples");

  ChainReport report;
  report.n = n;
  report.d = d;
  report.samples = samples;
  report.pass = true;

  struct Case {
    const char* name;
    ClassicKind kind;
    std::optional<Instantiation> (*sample)(std::mt19937_64&, int, int);
  };
  const Case cases[] = {
      {"lex_later_difference", ClassicKind::Lex, sample_lex_later},
      {"lex_first_difference", ClassicKind::Lex, sample_lex_first},
      {"revlex_beta_ends_early", ClassicKind::Revlex, sample_beta_ends_early},
      {"revlex_alpha_full", ClassicKind::Revlex, sample_alpha_full},
      {"revlex_alpha_top_only", ClassicKind::Revlex, sample_alpha_top_only},
      {"revlex_gap_at_second_top", ClassicKind::Revlex, sample_gap_at_second_top},
      {"revlex_hole_below", ClassicKind::Revlex, sample_hole_below},
  };

  MonomialOrder lex = classic_order(ClassicKind::Lex, n);
  MonomialOrder revlex = classic_order(ClassicKind::Revlex, n);
  std::vector<MonomialOrder> lex_ind, revlex_ind;  // index i-1 = variable i
  for (int i = 1; i <= n; ++i) {
    lex_ind.push_back(induced_matrix(lex, i).order);
    revlex_ind.push_back(induced_matrix(revlex, i).order);
  }

  auto run = [&](const Case& c, const Instantiation& inst) -> bool {
    const MonomialOrder& full = c.kind == ClassicKind::Lex ? lex : revlex;
    const std::vector<MonomialOrder>& ind = c.kind == ClassicKind::Lex ? lex_ind : revlex_ind;
    auto fail = [&](int link, int variable, const Monomial& x, const Monomial& y,
                    Comparison expected, Comparison actual) {
      report.failure = ChainLinkFailure{c.name, inst.alpha, inst.beta, link,
                                        variable, x, y, expected, actual};
      report.pass = false;
    };
    Comparison parent = full.compare(inst.alpha, inst.beta);
    if (parent != Comparison::Less) {
      fail(0, 0, inst.alpha, inst.beta, Comparison::Less, parent);
      return false;
    }
    for (size_t li = 0; li < inst.links.size(); ++li) {
      const Link& lk = inst.links[li];
      if (lk.x[lk.variable - 1] != lk.y[lk.variable - 1])
        throw std::logic_error("induction_chain_check: link coordinates differ");
      Comparison expected = lk.x == lk.y ? Comparison::Equal : Comparison::Less;
      Comparison actual = ind[static_cast<size_t>(lk.variable - 1)].compare(
          lk.x.without_variable(lk.variable - 1), lk.y.without_variable(lk.variable - 1));
      if (actual != expected) {
        fail(static_cast<int>(li) + 1, lk.variable, lk.x, lk.y, expected, actual);
        return false;
      }
    }
    return true;
  };

  for (const Case& c : cases) {
    ChainCaseReport cr;
    cr.name = c.name;
    for (const Instantiation& inst : boundaries(c.name, n, d)) {
      if (!run(c, inst)) {
        report.cases.push_back(std::move(cr));
        return report;
      }
      cr.boundary += 1;
    }
    std::mt19937_64 rng(0x6f72646572ULL ^ (static_cast<std::uint64_t>(n) << 40) ^
                        (static_cast<std::uint64_t>(d) << 20) ^
                        static_cast<std::uint64_t>(&c - cases));
    cr.feasible = true;
    for (int s = 0; s < samples; ++s) {
      std::optional<Instantiation> inst = c.sample(rng, n, d);
      if (!inst) {
        cr.feasible = false;
        break;
      }
      if (!run(c, *inst)) {
        report.cases.push_back(std::move(cr));
        return report;
      }
      cr.sampled += 1;
    }
    report.cases.push_back(std::move(cr));
  }
  return report;
}

}  // namespace matord
