/* Acceptance gate for the library: ten end-to-end checks, each with a wall
 * clock budget.  Prints one PASS/FAIL line per check and exits nonzero if
 * any check fails its content or its budget.  Run through ctest or
 * directly; there are no arguments. */

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "matord/equivalence.hpp"
#include "matord/families.hpp"
#include "matord/induced.hpp"
#include "matord/order.hpp"

using matord::ClassicKind;
using matord::Comparison;
using matord::Matrix;
using matord::Monomial;
using matord::MonomialOrder;
using matord::Rational;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;  // first failure reason, or informational summary
};

struct Criterion {
  int id;
  const char* label;
  long budget_ms;
  std::function<Outcome()> run;
};

/* Fails the outcome on the first violated condition and keeps its label;
 * later notes never overwrite the first failure. */
void require(Outcome& out, bool cond, const std::string& what) {
  if (!cond && out.pass) {
    out.pass = false;
    out.note = what;
  }
}

MonomialOrder classic(ClassicKind k, int n) { return matord::classic_order(k, n); }

const ClassicKind kKinds[] = {ClassicKind::Lex, ClassicKind::Deglex, ClassicKind::Revlex};

/* Random full-rank matrix with every column's first nonzero entry positive:
 * draw small rational entries, flip offending columns, retry on rank loss.
 * Deterministic given the generator state. */
MonomialOrder random_order(std::mt19937_64& rng, int n) {
  for (;;) {
    Matrix m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        m.at(r, c) = Rational(static_cast<long>(rng() % 11) - 5,
                              static_cast<long>(rng() % 3) + 1);
    for (int c = 0; c < n; ++c) {
      int first = -1;
      for (int r = 0; r < n && first < 0; ++r)
        if (!m.at(r, c).is_zero()) first = r;
      if (first < 0) m.at(0, c) = Rational(1);
      else if (m.at(first, c).sign() < 0)
        for (int r = 0; r < n; ++r) m.at(r, c) = -m.at(r, c);
    }
    auto v = MonomialOrder::validate(std::move(m));
    if (auto* o = std::get_if<MonomialOrder>(&v)) return std::move(*o);
  }
}

Outcome classic_chains() {
  Outcome out;
  MonomialOrder lex = classic(ClassicKind::Lex, 3);
  MonomialOrder deglex = classic(ClassicKind::Deglex, 3);
  MonomialOrder revlex = classic(ClassicKind::Revlex, 3);
  Monomial a({2, 2, 2}), b({2, 3, 0}), c({3, 0, 3});

  auto less = [&](const MonomialOrder& o, const Monomial& x, const Monomial& y) {
    return o.compare(x, y) == Comparison::Less;
  };
  require(out, less(lex, a, b) && less(lex, b, c) && less(lex, a, c),
          "first order ranks the examples differently");
  require(out, less(deglex, b, a) && less(deglex, a, c) && less(deglex, b, c),
          "second order ranks the examples differently");
  require(out, less(revlex, b, c) && less(revlex, c, a) && less(revlex, b, a),
          "third order ranks the examples differently");

  std::vector<Monomial> set = {a, b, c};
  require(out, matord::sort_monomials(lex, set) == std::vector<Monomial>{a, b, c},
          "lex sort order");
  require(out, matord::sort_monomials(deglex, set) == std::vector<Monomial>{b, a, c},
          "deglex sort order");
  require(out, matord::sort_monomials(revlex, set) == std::vector<Monomial>{b, c, a},
          "revlex sort order");
  return out;
}

Outcome equivalence_decisions() {
  Outcome out;
  MonomialOrder deglex2 = classic(ClassicKind::Deglex, 2);
  MonomialOrder revlex2 = classic(ClassicKind::Revlex, 2);

  auto v = matord::equivalent(deglex2, revlex2, 10);
  auto* eq = std::get_if<matord::Equivalent>(&v);
  require(out, eq != nullptr, "two-variable graded orders not certified equal");
  if (eq) {
    const Matrix& l = eq->certificate;
    require(out, mat_mul(l, deglex2.matrix()) == revlex2.matrix(),
            "certificate does not map one matrix to the other");
    bool shape = true;
    for (int r = 0; r < l.rows(); ++r) {
      shape = shape && l.at(r, r).sign() > 0;
      for (int c = r + 1; c < l.cols(); ++c) shape = shape && l.at(r, c).is_zero();
    }
    require(out, shape, "certificate is not lower triangular with positive diagonal");
  }

  auto w = matord::distinguishing_pair(classic(ClassicKind::Deglex, 3),
                                       classic(ClassicKind::Revlex, 3), 6);
  require(out, w.has_value(), "three-variable graded orders produced no witness");
  if (w) {
    require(out, w->first == Monomial({0, 2, 0}) && w->second == Monomial({1, 0, 1}),
            "unexpected first witness " + w->first.to_string() + " / " +
                w->second.to_string());
  }
  return out;
}

Outcome family_determinants_two_routes() {
  Outcome out;
  for (int n = 4; n <= 12; ++n) {
    Matrix m = matord::family_matrix(matord::Family::C, n);
    Rational want(4 - 3 * static_cast<long>(n));
    require(out, matord::determinant(m) == want,
            "fraction-free route disagrees at n=" + std::to_string(n));
    require(out, matord::determinant_cofactor(m) == want,
            "cofactor route disagrees at n=" + std::to_string(n));
  }
  return out;
}

Outcome determinant_table() {
  Outcome out;
  auto rows = matord::determinant_report(4, 12);
  require(out, rows.size() == 9, "row count");
  int divergences = 0;
  for (const auto& row : rows) {
    require(out, row.entries.size() == 10,
            "entry count at n=" + std::to_string(row.n));
    require(out, row.all_nonzero, "zero determinant at n=" + std::to_string(row.n));
    for (const auto& e : row.entries)
      if (!e.matches) ++divergences;
  }
  if (out.pass)
    out.note = "all nonzero; " + std::to_string(divergences) +
               " closed-form divergences recorded";
  return out;
}

Outcome families_verified() {
  Outcome out;
  for (int n = 4; n <= 8; ++n) {
    matord::FamilyVerification v = matord::verify_families(n, 6);
    std::string at = " at n=" + std::to_string(n);
    require(out, v.ok, "verification failed" + at);
    require(out, v.distinct_confirmed && v.witness.has_value(), "no witness" + at);
    require(out, static_cast<int>(v.induced.size()) == n, "induced count" + at);
    for (const auto& chk : v.induced) {
      require(out, chk.certified,
              "variable " + std::to_string(chk.variable) + " not certified" + at);
      if (!chk.certified) continue;
      const Matrix& l = std::get<matord::Equivalent>(chk.verdict).certificate;
      bool diag = true;
      for (int r = 0; r < l.rows(); ++r) diag = diag && l.at(r, r).sign() > 0;
      require(out, diag, "certificate diagonal not positive" + at);
      require(out, l.at(l.rows() - 1, l.cols() - 1) == chk.det_d / chk.det_c,
              "certificate scale differs from the determinant ratio" + at);
    }
  }
  return out;
}

Outcome restriction_agreement_holds() {
  Outcome out;
  auto probe = [&](const MonomialOrder& o, const std::string& name) {
    for (int i = 1; i <= o.nvars(); ++i) {
      matord::RestrictionReport r = matord::restriction_agreement(o, i, 6);
      require(out, r.pass, name + " disagrees with its restriction at i=" +
                               std::to_string(i));
    }
  };
  for (ClassicKind k : kKinds)
    for (int n = 2; n <= 5; ++n)
      probe(classic(k, n), matord::classic_name(k) + std::string("_") + std::to_string(n));
  for (matord::Family f : {matord::Family::C, matord::Family::D})
    for (int n = 4; n <= 5; ++n)
      probe(matord::build_family(f, n),
            matord::family_name(f) + std::string("_") + std::to_string(n));
  return out;
}

Outcome classic_restrictions_are_classics() {
  Outcome out;
  for (ClassicKind k : kKinds)
    for (int n = 2; n <= 8; ++n) {
      MonomialOrder small = classic(k, n - 1);
      for (int i = 1; i <= n; ++i) {
        MonomialOrder ind = matord::induced_matrix(classic(k, n), i).order;
        auto v = matord::equivalent(ind, small, 3);
        require(out, std::holds_alternative<matord::Equivalent>(v),
                std::string(matord::classic_name(k)) + " restriction at n=" +
                    std::to_string(n) + ", i=" + std::to_string(i) +
                    " is not the smaller classic");
      }
    }
  return out;
}

Outcome order_axioms() {
  Outcome out;
  std::mt19937_64 rng(0x61786f6d73ULL);
  std::vector<MonomialOrder> orders;
  for (ClassicKind k : kKinds)
    for (int n = 2; n <= 4; ++n) orders.push_back(classic(k, n));
  for (int t = 0; t < 50; ++t) orders.push_back(random_order(rng, 2 + t % 3));

  for (size_t oi = 0; oi < orders.size() && out.pass; ++oi) {
    const MonomialOrder& o = orders[oi];
    const int n = o.nvars();
    std::string which = " (order " + std::to_string(oi) + ")";
    auto ms = matord::enumerate_monomials(n, 4, matord::DegreeMode::UpTo);
    Monomial origin(std::vector<int>(n, 0));
    Monomial shift(std::vector<int>(n, 1));

    for (const Monomial& m : ms)
      if (!(m == origin))
        require(out, o.compare(origin, m) == Comparison::Less,
                "unit monomial is not minimal" + which);

    for (size_t i = 0; i < ms.size(); ++i)
      for (size_t j = i + 1; j < ms.size(); ++j) {
        Comparison ab = o.compare(ms[i], ms[j]);
        Comparison ba = o.compare(ms[j], ms[i]);
        require(out, ab != Comparison::Equal, "distinct monomials tie" + which);
        require(out,
                (ab == Comparison::Less && ba == Comparison::Greater) ||
                    (ab == Comparison::Greater && ba == Comparison::Less),
                "comparison is not antisymmetric" + which);
        require(out, o.compare(ms[i].plus(shift), ms[j].plus(shift)) == ab,
                "comparison is not translation invariant" + which);
      }

    auto sorted = matord::sort_monomials(o, ms);
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
      require(out, o.compare(sorted[i], sorted[i + 1]) == Comparison::Less,
              "sorted sequence is not strictly ascending" + which);
  }
  return out;
}

Outcome triangular_rescaling() {
  Outcome out;
  std::mt19937_64 rng(0x726573636c65ULL);
  const long diags[] = {1, 2, 3, 1};  // denominators below make halves etc.
  for (int t = 0; t < 50 && out.pass; ++t) {
    const int n = 2 + t % 3;
    MonomialOrder a = random_order(rng, n);
    Matrix l(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < r; ++c)
        l.at(r, c) = Rational(static_cast<long>(rng() % 7) - 3,
                              static_cast<long>(rng() % 2) + 1);
      l.at(r, r) = Rational(diags[rng() % 4], static_cast<long>(rng() % 2) + 1);
    }
    auto v = MonomialOrder::validate(mat_mul(l, a.matrix()));
    auto* b = std::get_if<MonomialOrder>(&v);
    require(out, b != nullptr,
            "rescaled matrix failed validation at t=" + std::to_string(t));
    if (!b) continue;
    require(out, matord::same_order_bounded(a, *b, 5) == std::nullopt,
            "rescaled matrix orders differently at t=" + std::to_string(t));
  }
  return out;
}

Outcome proof_chain_sampling() {
  Outcome out;
  for (int n : {4, 5}) {
    matord::ChainReport r = matord::induction_chain_check(n, 4, 100);
    std::string at = " at n=" + std::to_string(n);
    require(out, r.pass, "a chain link failed" + at +
                             (r.failure ? " in " + r.failure->case_name : ""));
    require(out, r.cases.size() == 7, "case count" + at);
    for (const auto& c : r.cases) {
      require(out, c.feasible, c.name + " infeasible" + at);
      require(out, c.sampled == 100, c.name + " sampled " +
                                         std::to_string(c.sampled) + at);
      require(out, c.boundary >= 1, c.name + " has no boundary instances" + at);
    }
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "three classic orders rank the example monomials", 1, classic_chains},
      {2, "equivalence certificate and first distinguishing witness", 1000,
       equivalence_decisions},
      {3, "C family determinant closed form by two independent routes", 1000,
       family_determinants_two_routes},
      {4, "determinant table nonzero for n = 4..12", 5000, determinant_table},
      {5, "families distinct with coinciding restrictions, n = 4..8", 60000,
       families_verified},
      {6, "restrictions agree with the parent order to degree 6", 30000,
       restriction_agreement_holds},
      {7, "classic orders restrict to the smaller classics", 10000,
       classic_restrictions_are_classics},
      {8, "order axioms on classics and random matrices", 30000, order_axioms},
      {9, "triangular rescaling preserves the order", 30000, triangular_rescaling},
      {10, "proof chains hold on sampled and boundary instances", 10000,
       proof_chain_sampling},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out = c.run();
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    bool in_budget = ms <= static_cast<double>(c.budget_ms);
    bool pass = out.pass && in_budget;
    if (!pass) ++failures;
    std::printf("%s  %2d  %-58s  %8.1f ms / %ld ms%s%s\n", pass ? "PASS" : "FAIL",
                c.id, c.label, ms, c.budget_ms,
                out.note.empty() ? "" : "  -- ", out.note.c_str());
    if (out.pass && !in_budget)
      std::printf("      %2d  over budget\n", c.id);
  }
  std::printf("%d/%d criteria passed\n",
              static_cast<int>(criteria.size()) - failures,
              static_cast<int>(criteria.size()));
  return failures == 0 ? 0 : 1;
}
