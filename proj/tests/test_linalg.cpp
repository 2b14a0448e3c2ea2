#include <random>

#include "doctest.h"
#include "liecheck/errors.hpp"
#include "liecheck/linalg.hpp"

using namespace liecheck;

namespace {

Matrix random_matrix(std::mt19937_64& rng, int r, int c, int rank_cap) {
  // product of r x k and k x c integer matrices has rank <= k
  Matrix a(r, rank_cap), b(rank_cap, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < rank_cap; ++j) a(i, j) = static_cast<long long>(rng() % 7) - 3;
  for (int i = 0; i < rank_cap; ++i)
    for (int j = 0; j < c; ++j) b(i, j) = static_cast<long long>(rng() % 7) - 3;
  return a * b;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rank, kernel and annihilator") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      int r = 1 + rng() % 6, c = 1 + rng() % 6, k = 1 + rng() % 4;
      Matrix m = random_matrix(rng, r, c, k);
      int rk = rank(m);
      CHECK(rk <= std::min({r, c, k}));
      Matrix ker = kernel(m);
      CHECK(ker.rows() == c);
      CHECK(ker.cols() == c - rk);
      if (ker.cols()) {
        CHECK((m * ker).is_zero());
        CHECK(rank(ker) == ker.cols());
      }
      Matrix ann = annihilator(m);
      CHECK(ann.rows() == r - rk);
      if (ann.rows()) CHECK((ann * m).is_zero());
      Matrix cb = column_basis(m);
      CHECK(cb.cols() == rk);
      CHECK(column_space_contains(cb, m));
      CHECK(column_space_contains(m, cb));
    }
  }

  TEST_CASE("rref of a known matrix") {
    Matrix m = Matrix::from_rows({{2, 4, 2}, {1, 2, 3}, {0, 0, 4}});
    std::vector<int> piv;
    Matrix r = rref(m, &piv);
    CHECK(piv == std::vector<int>{0, 2});
    CHECK(r == Matrix::from_rows({{1, 2, 0}, {0, 0, 1}, {0, 0, 0}}));
    Matrix half = Matrix::from_rows({{2}});
    Matrix x = solve(half, Matrix::from_rows({{1}}));
    CHECK(x(0, 0) == Rational(1, 2));
  }

  TEST_CASE("solve") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      int r = 2 + rng() % 5, c = 1 + rng() % 4;
      Matrix a = random_matrix(rng, r, c, c);  // usually full column rank
      Matrix x(c, 2);
      for (int i = 0; i < c; ++i)
        for (int j = 0; j < 2; ++j) x(i, j) = static_cast<long long>(rng() % 9) - 4;
      Matrix b = a * x;
      Matrix y = solve(a, b);
      CHECK(a * y == b);
    }
    Matrix a = Matrix::from_rows({{1}, {1}});
    CHECK_THROWS_AS(solve(a, Matrix::from_rows({{1}, {2}})), InternalError);
  }

  TEST_CASE("products and transposes") {
    Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    CHECK(a * Matrix::identity(2) == a);
    CHECK(a.transpose() == Matrix::from_rows({{1, 3}, {2, 4}}));
    CHECK(a.hcat(Matrix::identity(2)).cols() == 4);
    CHECK(a.column(1) == Matrix::from_rows({{2}, {4}}));
  }
}
