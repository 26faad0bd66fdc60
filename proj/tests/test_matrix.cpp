#include <stdexcept>
#include "doctest.h"
#include "matord/matrix.hpp"

using matord::Matrix;
using matord::Rational;

TEST_CASE("matrix basics") {
  Matrix z(2, 3);
  CHECK(z.rows() == 2);
  CHECK(z.cols() == 3);
  CHECK(z.at(1, 2) == Rational(0));
  CHECK_THROWS_AS(Matrix(0, 1), std::invalid_argument);

  Matrix m{{1, 2}, {3, 4}};
  CHECK(m.at(0, 1) == Rational(2));
  CHECK(m.row(1) == std::vector<Rational>{Rational(3), Rational(4)});
  CHECK(Matrix::identity(2) == Matrix{{1, 0}, {0, 1}});
  CHECK(m != Matrix::identity(2));
}

TEST_CASE("slicing") {
  Matrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  CHECK(m.without_column(1) == Matrix{{1, 3}, {4, 6}, {7, 9}});
  CHECK(m.without_row(0) == Matrix{{4, 5, 6}, {7, 8, 9}});
  CHECK(m.top_rows(2) == Matrix{{1, 2, 3}, {4, 5, 6}});
}

TEST_CASE("products") {
  Matrix a{{1, 2}, {3, 4}};
  Matrix b{{0, 1}, {1, 0}};
  CHECK(mat_mul(a, b) == Matrix{{2, 1}, {4, 3}});
  Matrix half = scalar_mul(Rational(1, 2), a);
  CHECK(half.at(0, 0) == Rational(1, 2));
  CHECK(half.at(0, 1) == Rational(1));
  CHECK(half.at(1, 0) == Rational(3, 2));
  CHECK(half.at(1, 1) == Rational(2));
  CHECK(mat_vec(a, {1, 1}) == std::vector<Rational>{Rational(3), Rational(7)});
}

TEST_CASE("determinants by elimination and by cofactor expansion agree") {
  CHECK(determinant(Matrix::identity(4)) == Rational(1));
  CHECK(determinant(Matrix{{1, 2}, {3, 4}}) == Rational(-2));
  CHECK(determinant(Matrix{{0, 1}, {1, 0}}) == Rational(-1));  // needs a row swap
  CHECK(determinant(Matrix{{1, 1}, {2, 2}}) == Rational(0));

  Matrix rational_entries(3, 3);
  rational_entries.at(0, 0) = Rational(1, 2);
  rational_entries.at(0, 1) = Rational(1, 3);
  rational_entries.at(0, 2) = Rational(2);
  rational_entries.at(1, 0) = Rational(-1);
  rational_entries.at(1, 1) = Rational(3, 4);
  rational_entries.at(1, 2) = Rational(0);
  rational_entries.at(2, 0) = Rational(5);
  rational_entries.at(2, 1) = Rational(1);
  rational_entries.at(2, 2) = Rational(-2, 7);

  const Matrix cases[] = {
      Matrix{{1, 2}, {3, 4}},
      Matrix{{2, 0, 1}, {1, 1, 1}, {0, 3, 5}},
      Matrix{{1, 1, 1, 1}, {1, 1, 0, 0}, {11, 3, 2, 1}, {0, 0, 0, 1}},
      Matrix{{1, 1, 1, 1}, {1, 1, 0, 0}, {6, 2, 3, 1}, {0, 0, 0, 1}},
      rational_entries,
  };
  for (const Matrix& m : cases) CHECK(determinant(m) == determinant_cofactor(m));

  CHECK(determinant(cases[2]) == Rational(-8));
  CHECK(determinant(cases[3]) == Rational(-4));
}

TEST_CASE("rank and the first dependent row") {
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix{{1, 1}, {2, 2}}) == 1);
  CHECK(rank(Matrix{{1, 0}, {0, 0}, {0, 1}}) == 2);

  // 0-based: the reported row is the second one in both shapes below.
  CHECK(first_dependent_row(Matrix{{1, 0}, {0, 0}, {0, 1}}) == 1);
  CHECK(first_dependent_row(Matrix{{1, 1}, {2, 2}, {0, 1}}) == 1);
  CHECK(first_dependent_row(Matrix::identity(3)) == std::nullopt);
  CHECK(first_dependent_row(Matrix{{0, 0}, {1, 0}}) == 0);  // zero row counts
}

TEST_CASE("solving a row as a combination of basis rows") {
  // Third row of one family minor against another's basis: mixed-sign
  // rational coefficients, unique because the basis is square nonsingular.
  Matrix basis{{1, 1, 1}, {1, 1, 0}, {11, 3, 2}};
  auto c = solve_row_combination(basis, {Rational(6), Rational(2), Rational(3)});
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<Rational>{Rational(2), Rational(-3, 2), Rational(1, 2)});

  // Inconsistent target.
  Matrix flat{{1, 0, 0}, {0, 1, 0}};
  CHECK(solve_row_combination(flat, {Rational(0), Rational(0), Rational(1)}) == std::nullopt);

  // Dependent basis rows: free coefficients settle at zero.
  Matrix dep{{1, 0}, {2, 0}};
  auto d = solve_row_combination(dep, {Rational(3), Rational(0)});
  REQUIRE(d.has_value());
  CHECK(*d == std::vector<Rational>{Rational(3), Rational(0)});
}
