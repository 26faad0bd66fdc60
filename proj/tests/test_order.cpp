#include <stdexcept>
#include <random>
#include <variant>

#include "doctest.h"
#include "matord/order.hpp"

using matord::ClassicKind;
using matord::Comparison;
using matord::Matrix;
using matord::Monomial;
using matord::MonomialOrder;
using matord::Rational;
using matord::ValidationError;

namespace {

ValidationError expect_invalid(Matrix m) {
  auto v = MonomialOrder::validate(std::move(m));
  REQUIRE(std::holds_alternative<ValidationError>(v));
  return std::get<ValidationError>(v);
}

}  // namespace

TEST_CASE("validation verdicts") {
  CHECK(std::holds_alternative<MonomialOrder>(MonomialOrder::validate(Matrix::identity(3))));

  ValidationError rankless = expect_invalid(Matrix{{1, 1}, {2, 2}});
  CHECK(rankless.kind == ValidationError::Kind::RankDeficient);
  CHECK(rankless.message() == "RankDeficient");

  ValidationError sign = expect_invalid(Matrix{{1, -1}, {0, 1}});
  CHECK(sign.kind == ValidationError::Kind::BadColumnSign);
  CHECK(sign.column == 2);
  CHECK(sign.message() == "BadColumnSign(2)");

  // A zero column sinks the rank before any sign inspection happens.
  ValidationError zerocol = expect_invalid(Matrix{{0, 1}, {0, -1}});
  CHECK(zerocol.kind == ValidationError::Kind::RankDeficient);

  // More rows than columns is fine while full column rank holds.
  CHECK(std::holds_alternative<MonomialOrder>(
      MonomialOrder::validate(Matrix{{1, 0}, {1, 1}, {0, 1}})));

  CHECK_THROWS_AS(MonomialOrder::require(Matrix{{1, 1}, {2, 2}}), std::logic_error);
}

TEST_CASE("classic order matrices") {
  CHECK(matord::classic_order(ClassicKind::Lex, 3).matrix() == Matrix::identity(3));
  CHECK(matord::classic_order(ClassicKind::Deglex, 3).matrix() ==
        Matrix{{1, 1, 1}, {1, 0, 0}, {0, 1, 0}});
  CHECK(matord::classic_order(ClassicKind::Revlex, 3).matrix() ==
        Matrix{{1, 1, 1}, {0, 0, -1}, {0, -1, 0}});
  CHECK(matord::classic_order(ClassicKind::Revlex, 2).matrix() == Matrix{{1, 1}, {0, -1}});
  for (ClassicKind k : {ClassicKind::Lex, ClassicKind::Deglex, ClassicKind::Revlex})
    CHECK(matord::classic_order(k, 1).matrix() == Matrix{{1}});
}

TEST_CASE("comparison under the classics") {
  MonomialOrder lex = matord::classic_order(ClassicKind::Lex, 3);
  MonomialOrder deglex = matord::classic_order(ClassicKind::Deglex, 3);
  MonomialOrder revlex = matord::classic_order(ClassicKind::Revlex, 3);

  Monomial a({2, 3, 0}), b({2, 2, 2}), c({3, 0, 3});

  CHECK(lex.compare(b, a) == Comparison::Less);
  CHECK(lex.compare(a, c) == Comparison::Less);
  CHECK(deglex.compare(a, b) == Comparison::Less);
  CHECK(deglex.compare(b, c) == Comparison::Less);
  CHECK(revlex.compare(a, c) == Comparison::Less);
  CHECK(revlex.compare(c, b) == Comparison::Less);
  CHECK(revlex.compare(b, c) == Comparison::Greater);
  CHECK(lex.compare(a, a) == Comparison::Equal);
  CHECK(matord::to_token(Comparison::Less) == std::string("LT"));
}

TEST_CASE("sorting the three-element example set") {
  std::vector<Monomial> input = {Monomial({2, 3, 0}), Monomial({2, 2, 2}), Monomial({3, 0, 3})};

  auto sorted = [&](ClassicKind k) {
    return matord::sort_monomials(matord::classic_order(k, 3), input);
  };
  CHECK(sorted(ClassicKind::Lex) ==
        std::vector<Monomial>{Monomial({2, 2, 2}), Monomial({2, 3, 0}), Monomial({3, 0, 3})});
  CHECK(sorted(ClassicKind::Deglex) ==
        std::vector<Monomial>{Monomial({2, 3, 0}), Monomial({2, 2, 2}), Monomial({3, 0, 3})});
  CHECK(sorted(ClassicKind::Revlex) ==
        std::vector<Monomial>{Monomial({2, 3, 0}), Monomial({3, 0, 3}), Monomial({2, 2, 2})});

  // Sorting is idempotent and a permutation of its input.
  auto once = sorted(ClassicKind::Revlex);
  CHECK(matord::sort_monomials(matord::classic_order(ClassicKind::Revlex, 3), once) == once);
}

TEST_CASE("distinct monomials never tie under a full-rank square order") {
  MonomialOrder deglex = matord::classic_order(ClassicKind::Deglex, 2);
  auto ms = matord::enumerate_monomials(2, 4, matord::DegreeMode::UpTo);
  for (size_t i = 0; i < ms.size(); ++i)
    for (size_t j = 0; j < ms.size(); ++j) {
      Comparison c = deglex.compare(ms[i], ms[j]);
      if (i == j) CHECK(c == Comparison::Equal);
      else CHECK(c != Comparison::Equal);
    }
}

TEST_CASE("order axioms hold for classics and random valid matrices") {
  std::mt19937_64 rng(20240817);
  auto random_valid = [&](int n) {
    for (;;) {
      Matrix m(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          m.at(r, c) = Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
      for (int c = 0; c < n; ++c) {
        int first = -1;
        for (int r = 0; r < n && first < 0; ++r)
          if (!m.at(r, c).is_zero()) first = r;
        if (first < 0) m.at(0, c) = Rational(1);
        else if (m.at(first, c).sign() < 0)
          for (int r = 0; r < n; ++r) m.at(r, c) = -m.at(r, c);
      }
      auto v = MonomialOrder::validate(m);
      if (std::holds_alternative<MonomialOrder>(v)) return std::get<MonomialOrder>(v);
    }
  };

  std::vector<MonomialOrder> orders;
  for (int n = 2; n <= 3; ++n)
    for (ClassicKind k : {ClassicKind::Lex, ClassicKind::Deglex, ClassicKind::Revlex})
      orders.push_back(matord::classic_order(k, n));
  for (int t = 0; t < 10; ++t) orders.push_back(random_valid(2 + static_cast<int>(t % 2)));

  for (const MonomialOrder& o : orders) {
    const int n = o.nvars();
    auto ms = matord::enumerate_monomials(n, 3, matord::DegreeMode::UpTo);
    Monomial origin(std::vector<int>(n, 0));
    Monomial shift(std::vector<int>(n, 1));
    for (const Monomial& m : ms) {
      if (m == origin) continue;
      CHECK(o.compare(origin, m) == Comparison::Less);  // the unit is minimal
    }
    for (const Monomial& a : ms)
      for (const Monomial& b : ms) {
        Comparison ab = o.compare(a, b);
        Comparison ba = o.compare(b, a);
        if (ab == Comparison::Less) CHECK(ba == Comparison::Greater);
        if (ab == Comparison::Equal) CHECK(ba == Comparison::Equal);
        // translation invariance
        Comparison shifted = o.compare(a.plus(shift), b.plus(shift));
        CHECK(shifted == ab);
      }
  }
}
