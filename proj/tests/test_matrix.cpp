#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ratblow/matrix.hpp"

using namespace ratblow;

namespace {

RatMatrix random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST(Matrix, ProductAndTranspose) {
  RatMatrix a{{1, 2}, {3, 4}};
  RatMatrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (RatMatrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), (RatMatrix{{1, 3}, {2, 4}}));
  EXPECT_THROW(a * RatMatrix(3, 1), Error);
}

TEST(Matrix, InverseMatchesElimination) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    RatMatrix m = random_matrix(rng, 1 + trial % 5, -4, 4);
    if (determinant(m) == 0) {
      EXPECT_THROW(inverse(m), Error);
      continue;
    }
    RatMatrix inv = inverse(m);
    EXPECT_EQ(m * inv, RatMatrix::identity(m.rows()));
    oracle::Dense d(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
    auto want = oracle::gauss_inverse(d);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_EQ(inv(i, j), want[i][j]);
  }
}

TEST(Matrix, SolveAndDeterminant) {
  RatMatrix m{{2, 1}, {1, 3}};
  auto x = solve(m, {Rational(1), Rational(2)});
  EXPECT_EQ(x[0], make_rational(1, 5));
  EXPECT_EQ(x[1], make_rational(3, 5));
  EXPECT_EQ(determinant(m), 5);
  EXPECT_EQ(determinant(RatMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_THROW(solve(RatMatrix{{1, 2}, {2, 4}}, {Rational(1), Rational(1)}), Error);
}

TEST(Matrix, HermiteFormSpansSameLattice) {
  IntMatrix m{{2, 4, 6}, {1, 3, 5}, {3, 7, 11}};
  IntMatrix h = row_hnf(m);
  ASSERT_EQ(h.rows(), 2u);
  // Each original row is an integer combination of the HNF rows.
  RatMatrix basis = to_rational(h);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Rational> v;
    for (std::size_t j = 0; j < m.cols(); ++j) v.emplace_back(m(i, j));
    EXPECT_NO_THROW(integer_coordinates(basis, v));
  }
  EXPECT_GT(h(0, 0), 0);
}

TEST(Matrix, LeftKernel) {
  IntMatrix m{{1, 0}, {0, 1}, {1, 1}};
  IntMatrix k = integer_left_kernel(m);
  ASSERT_EQ(k.rows(), 1u);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer s = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += k(0, i) * m(i, c);
    EXPECT_EQ(s, 0);
  }
  EXPECT_EQ(abs(k(0, 2)), 1);
}

TEST(Matrix, IntegerCoordinatesRejectsFractions) {
  RatMatrix basis{{2, 0}, {0, 1}};
  EXPECT_EQ(integer_coordinates(basis, {Rational(4), Rational(3)}), (std::vector<Integer>{2, 3}));
  EXPECT_THROW(integer_coordinates(basis, {Rational(1), Rational(0)}), Error);
}

TEST(Matrix, SpanBasisOfRationalRows) {
  RatMatrix b = rational_span_basis({{make_rational(1, 2), Rational(0)}, {Rational(1), Rational(0)}});
  ASSERT_EQ(b.rows(), 1u);
  EXPECT_EQ(b(0, 0), make_rational(1, 2));
}
