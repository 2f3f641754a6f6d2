#include <doctest.h>

#include "oracles.hpp"
#include "rkt/core/error.hpp"
#include "rkt/core/lattice.hpp"
#include "rkt/core/poly.hpp"

using namespace rkt;

TEST_CASE("integer helpers") {
  CHECK(parse_integer("-123") == -123);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_integer("12a"), Error);
  CHECK(ipow(3, 4) == 81);
  CHECK(binomial(10, 3) == 120);
  CHECK(prime_divisors(360) == std::vector<unsigned long>{2, 3, 5});
  CHECK(euler_phi(12) == 4);
  CHECK(isqrt(Integer(99)) == 9);
  CHECK(is_square(Integer(144)));
  CHECK_FALSE(is_square(Integer(-4)));
  CHECK(floor_div(-7, 2) == -4);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + rng() % 5;
    IntMatrix A = oracle::random_matrix(rng, n, n, 9);
    std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = A(i, j);
    CHECK(determinant(A) == oracle::cofactor_det(rows));
    CHECK(determinant(to_rational(A)) == Rational(oracle::cofactor_det(rows)));
  }
}

TEST_CASE("rational inverse") {
  RatMatrix A = to_rational(IntMatrix::from_rows({{2, 1}, {7, 4}}));
  CHECK(A * inverse(A) == RatMatrix::identity(2));
  CHECK_THROWS_AS(inverse(to_rational(IntMatrix::from_rows({{1, 2}, {2, 4}}))), Error);
}

TEST_CASE("column echelon is a unimodular change of basis") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    IntMatrix A = oracle::random_matrix(rng, 1 + rng() % 4, 1 + rng() % 5, 6);
    auto ce = column_echelon(A);
    CHECK(A * ce.W == ce.H);
    Integer d = determinant(ce.W);
    CHECK((d == 1 || d == -1));
    CHECK(ce.rank == rank(A));
    for (std::size_t k = 1; k < ce.pivot_rows.size(); ++k) CHECK(ce.pivot_rows[k] > ce.pivot_rows[k - 1]);
  }
}

TEST_CASE("integer kernel is saturated and complete") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    std::size_t cols = 2 + rng() % 4;
    IntMatrix A = oracle::random_matrix(rng, 1 + rng() % 3, cols, 5);
    IntMatrix K = integer_kernel(A);
    CHECK((A * K).is_zero());
    CHECK(K.cols() == cols - rank(A));
    if (K.cols() > 0) CHECK(saturate(K) == lattice_basis(K));
  }
}

TEST_CASE("saturation of a scaled lattice") {
  IntMatrix B = IntMatrix::from_rows({{2}, {4}});
  CHECK(saturate(B) == IntMatrix::from_rows({{1}, {2}}));
  CHECK(lattice_basis(B) == IntMatrix::from_rows({{2}, {4}}));
}

TEST_CASE("flag basis pivots increase and span the lattice") {
  IntMatrix B = IntMatrix::from_rows({{1, 0, 3}, {2, 1, 0}, {0, 0, 0}, {0, 1, 1}});
  auto fb = flag_basis(B);
  CHECK(lattice_basis(fb.basis) == lattice_basis(B));
  for (std::size_t k = 1; k < fb.pivots.size(); ++k) CHECK(fb.pivots[k] > fb.pivots[k - 1]);
  for (std::size_t k = 0; k < fb.pivots.size(); ++k) {
    CHECK(fb.basis(fb.pivots[k], k) != 0);
    for (std::size_t r = fb.pivots[k] + 1; r < B.rows(); ++r) CHECK(fb.basis(r, k) == 0);
  }
}

TEST_CASE("polynomial arithmetic") {
  Poly x = Poly::x();
  Poly f = x * x - Poly(1);
  auto [q, r] = divmod(f, x - Poly(1));
  CHECK(q == x + Poly(1));
  CHECK(r.is_zero());
  CHECK(poly_gcd(f, x * x + Poly(2) * x + Poly(1)) == x + Poly(1));
  CHECK(squarefree(f));
  CHECK_FALSE(squarefree(f * (x - Poly(1))));
  CHECK(f(Rational(3)) == 8);
  CHECK(f.derivative() == Poly(2) * x);
}

TEST_CASE("interpolation reproduces a cubic") {
  Poly x = Poly::x();
  Poly f = x * x * x - Poly(Rational(1, 2)) * x + Poly(3);
  std::vector<Rational> xs{0, 1, 2, 5}, ys;
  for (const auto& t : xs) ys.push_back(f(t));
  CHECK(interpolate(xs, ys) == f);
}

TEST_CASE("characteristic polynomial of a companion matrix") {
  RatMatrix C(3, 3);
  C(1, 0) = 1;
  C(2, 1) = 1;
  C(0, 2) = 2;  // x^3 - 2
  CHECK(charpoly(C) == Poly::monomial(1, 3) - Poly(2));
}
