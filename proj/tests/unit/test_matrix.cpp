#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <random>

#include "concord/matrix.hpp"
#include "oracles.hpp"

using namespace concord;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// gcd of all k x k minors.
Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  Integer g = 0;
  std::vector<std::size_t> rows(k), cols(k);
  std::function<void(std::size_t, std::size_t, std::size_t, std::size_t)> pick;
  pick = [&](std::size_t ri, std::size_t rstart, std::size_t ci, std::size_t cstart) {
    if (ri < k) {
      for (std::size_t i = rstart; i < m.rows(); ++i) {
        rows[ri] = i;
        pick(ri + 1, i + 1, ci, cstart);
      }
      return;
    }
    if (ci < k) {
      for (std::size_t j = cstart; j < m.cols(); ++j) {
        cols[ci] = j;
        pick(ri, rstart, ci + 1, j + 1);
      }
      return;
    }
    oracle::RatRows sub(k, std::vector<Rational>(k));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) sub[a][b] = m(rows[a], cols[b]);
    g = gcd(g, Integer(oracle::laplace_det(sub).get_num()));
  };
  pick(0, 0, 0, 0);
  return g;
}

}  // namespace

TEST(Matrix, BasicArithmetic) {
  const IntMatrix a{{1, 2}, {3, 4}};
  const IntMatrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (IntMatrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), (IntMatrix{{1, 3}, {2, 4}}));
  EXPECT_EQ(power(b, 2), IntMatrix::identity(2));
}

TEST(Matrix, DeterminantMatchesLaplace) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const IntMatrix m = random_matrix(rng, n, n, 9);
    EXPECT_EQ(Rational(determinant(m)), oracle::laplace_det(oracle::rows_of(m)));
    EXPECT_EQ(determinant(to_rational(m)), oracle::laplace_det(oracle::rows_of(m)));
  }
}

TEST(Matrix, RationalInverse) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix m = random_matrix(rng, 4, 4, 5);
    if (determinant(m) == 0) {
      EXPECT_THROW(inverse(to_rational(m)), Error);
      continue;
    }
    EXPECT_EQ(to_rational(m) * inverse(to_rational(m)), RatMatrix::identity(4));
  }
}

TEST(Matrix, SmithFormAgainstDeterminantalDivisors) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    IntMatrix m = random_matrix(rng, r, c, 6);
    if (trial % 5 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(0, j) = m(1, j);
    const SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.left * m * s.right, s.diagonal);
    EXPECT_EQ(abs(determinant(s.left)), 1);
    EXPECT_EQ(abs(determinant(s.right)), 1);
    Integer prev = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      const Integer dk = determinantal_divisor(m, k);
      if (dk == 0) {
        EXPECT_EQ(s.diagonal(k - 1, k - 1), 0);
        continue;
      }
      EXPECT_EQ(s.diagonal(k - 1, k - 1) * prev, dk) << "k=" << k;
      prev = dk;
    }
  }
}

TEST(Matrix, HermiteFormSpansSameLattice) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix m = random_matrix(rng, 3, 4, 5);
    const IntMatrix h = hermite_normal_form(m);
    EXPECT_EQ(h.rows(), rank(m));
    std::size_t col = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      while (h(i, col) == 0) ++col;
      EXPECT_GT(h(i, col), 0);
      for (std::size_t k = 0; k < i; ++k) {
        EXPECT_GE(h(k, col), 0);
        EXPECT_LT(h(k, col), h(i, col));
      }
    }
    EXPECT_EQ(hermite_normal_form(h), h);
  }
}

TEST(Matrix, LeftKernel) {
  const IntMatrix m{{1, 2}, {2, 4}, {0, 1}};
  const IntMatrix k = integer_left_kernel(m);
  ASSERT_EQ(k.rows(), 1u);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer dot = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) dot += k(0, i) * m(i, j);
    EXPECT_EQ(dot, 0);
  }
  EXPECT_EQ(abs(k(0, 0)), 2);
}

TEST(Matrix, InertiaMatchesEigenvalues) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + trial % 5;
    IntMatrix a = random_matrix(rng, n, n, 4);
    if (trial % 7 == 0 && n > 1)
      for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = a(j, n - 1) = 0;
    const IntMatrix s = a + a.transpose();
    // Symmetric real matrix: r = 1/2 gives 2(A + A^T) in the oracle.
    const long expected = oracle::float_signature(a, 0.5);
    EXPECT_EQ(inertia(to_rational(s)).signature(), expected);
    EXPECT_EQ(inertia(to_rational(s)).zero, n - rank(s));
  }
}
