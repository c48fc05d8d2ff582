#include <gtest/gtest.h>

#include <random>

#include "concord/branched_covers.hpp"
#include "concord/signature_profiles.hpp"
#include "oracles.hpp"

using namespace concord;

namespace {

// Random unimodular matrix as a product of elementary moves.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix p = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int step = 0; step < 6; ++step) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const int c = coef(rng);
    for (std::size_t r = 0; r < n; ++r) p(r, j) += c * p(r, i);
  }
  return p;
}

IntPolynomial reversed(const IntPolynomial& p) {
  std::vector<Integer> c = p.coeffs();
  std::reverse(c.begin(), c.end());
  return IntPolynomial(std::move(c));
}

}  // namespace

class RandomForms : public ::testing::TestWithParam<unsigned> {};

TEST_P(RandomForms, CharpolyIdentityHolds) {
  std::mt19937_64 rng(100 + GetParam());
  for (int trial = 0; trial < 25; ++trial) {
    const IntMatrix a = oracle::random_seifert(rng, GetParam());
    const SeifertForm f(a);
    EXPECT_TRUE(charpoly_identity_check(f));
    const IntMatrix g = isometric_structure(f);
    EXPECT_EQ(f.skew() * g, a);
    // det(xI - G) at sample points against the independent determinant.
    const IntPolynomial cp = characteristic_polynomial(g);
    for (long x = -2; x <= 2; ++x) EXPECT_EQ(cp.eval(Rational(x)), oracle::charpoly_at(g, Rational(x)));
  }
}

TEST_P(RandomForms, AlexanderIsSymmetric) {
  std::mt19937_64 rng(200 + GetParam());
  for (int trial = 0; trial < 25; ++trial) {
    const IntPolynomial d = strip_x_power(alexander(SeifertForm(oracle::random_seifert(rng, GetParam()))));
    const IntPolynomial r = reversed(d);
    EXPECT_TRUE(r == d || r == IntPolynomial() - d);
    EXPECT_EQ(abs(d.eval(Rational(1))), 1);
  }
}

TEST_P(RandomForms, ProfileSymmetryAndMirror) {
  std::mt19937_64 rng(300 + GetParam());
  for (int trial = 0; trial < 15; ++trial) {
    const SeifertForm f(oracle::random_seifert(rng, GetParam()));
    const SignatureProfile p = profile_from_seifert(f);
    for (int i = 0; i < 30; ++i) {
      const Rational r = oracle::random_unit_rational(rng, 200);
      EXPECT_EQ(p.eval(r), p.eval(Rational(1 - r)));
    }
    EXPECT_EQ(profile_from_seifert(mirror(f)), negate(p));
    EXPECT_TRUE(add(p, negate(p)).normalized().is_zero());
    EXPECT_EQ(p.eval(make_rational(1, 2)), sigma_half(f));
  }
}

TEST_P(RandomForms, CongruenceInvariance) {
  std::mt19937_64 rng(400 + GetParam());
  for (int trial = 0; trial < 10; ++trial) {
    const IntMatrix a = oracle::random_seifert(rng, GetParam());
    const IntMatrix p = random_unimodular(rng, a.rows());
    const SeifertForm f(a), g(p.transpose() * a * p);
    EXPECT_EQ(profile_from_seifert(f), profile_from_seifert(g));
    const IntPolynomial da = alexander(f), dg = alexander(g);
    EXPECT_TRUE(da == dg || da == IntPolynomial() - dg);
    for (unsigned long q : {2UL, 3UL}) EXPECT_EQ(homology_order(f, q), homology_order(g, q));
  }
}

TEST_P(RandomForms, DoubleCoverOrderIsDeterminant) {
  std::mt19937_64 rng(500 + GetParam());
  for (int trial = 0; trial < 20; ++trial) {
    const SeifertForm f(oracle::random_seifert(rng, GetParam()));
    const Integer det = abs(determinant(f.symmetrized()));
    EXPECT_EQ(*homology_order(f, 2), det);
    EXPECT_EQ(det % 2, 1);
  }
}

INSTANTIATE_TEST_SUITE_P(Genus, RandomForms, ::testing::Values(1u, 2u, 3u));

TEST(Properties, BlockSumIsAdditive) {
  std::mt19937_64 rng(600);
  for (int trial = 0; trial < 10; ++trial) {
    const SeifertForm f(oracle::random_seifert(rng, 1)), g(oracle::random_seifert(rng, 2));
    const SeifertForm s = block_sum(f, g);
    EXPECT_EQ(alexander(s), alexander(f) * alexander(g));
    EXPECT_EQ(profile_from_seifert(s), add(profile_from_seifert(f), profile_from_seifert(g)));
    EXPECT_EQ(*homology_order(s, 3), *homology_order(f, 3) * *homology_order(g, 3));
  }
}

TEST(Properties, SatellitePullbackPointwise) {
  std::mt19937_64 rng(700);
  for (int trial = 0; trial < 10; ++trial) {
    const SignatureProfile comp = profile_from_seifert(SeifertForm(oracle::random_seifert(rng, 1)));
    const SignatureProfile orbit = profile_from_seifert(SeifertForm(oracle::random_seifert(rng, 1)));
    const unsigned long w = 1 + trial % 4;
    const SignatureProfile sat = satellite_pullback(comp, w, orbit);
    for (int i = 0; i < 30; ++i) {
      const Rational r = oracle::random_unit_rational(rng, 150);
      const Rational wr = frac(Rational(r * static_cast<long>(w)));
      EXPECT_EQ(sat.eval(r), comp.eval(wr) + orbit.eval(r));
    }
  }
}
