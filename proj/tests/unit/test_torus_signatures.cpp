#include <gtest/gtest.h>

#include <numeric>

#include "concord/torus_signatures.hpp"
#include "oracles.hpp"

using namespace concord;

TEST(Torus, JumpFunction) {
  EXPECT_EQ(jump_f(2, 3, make_rational(1, 6)), -1);
  EXPECT_EQ(jump_f(2, 3, make_rational(1, 4)), 0);
  for (long k = 1; k <= 12; ++k)
    for (long d = 1; d <= k; ++d) EXPECT_EQ(jump_f(2, 2 * k + 1, make_rational(2 * d - 1, 2 * (2 * k + 1))), -1);
  for (long s = 1; s < 12; ++s) {
    const Rational r = make_rational(s, 12);
    EXPECT_EQ(jump_f(3, 4, r), -jump_f(3, 4, Rational(1 - r)));
  }
}

TEST(Torus, JumpsMatchLatticeOracle) {
  for (long m = 2; m <= 7; ++m)
    for (long n = m + 1; n <= 11; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const SignatureProfile p = profile_from_jumps(torus_jumps(m, n));
      for (long s = 1; s < 2 * m * n; ++s) {
        const Rational r = make_rational(s, 2 * m * n);
        EXPECT_EQ(p.eval(r), oracle::torus_signature(m, n, r)) << m << "," << n << " at " << to_string(r);
      }
    }
}

TEST(Torus, ClosedFormT2) {
  EXPECT_EQ(sigma_T2(1, make_rational(1, 3)), -2);
  EXPECT_EQ(sigma_T2(1, make_rational(1, 6)), -1);
  EXPECT_EQ(sigma_T2(3, make_rational(1, 13)), -2);
  for (long k = 1; k <= 8; ++k)
    for (long d = 2; d <= 40; ++d)
      for (long s = 1; s < d; ++s) {
        const Rational r = make_rational(s, d);
        EXPECT_EQ(sigma_T2(k, r), oracle::torus_signature(2, 2 * k + 1, r));
      }
  EXPECT_EQ(sigma_T2(0, make_rational(1, 3)), 0);
}

TEST(Torus, ClosedFormTll1) {
  EXPECT_EQ(sigma_Tll1(3, make_rational(1, 4)), 4);
  EXPECT_EQ(sigma_Tll1(4, make_rational(2, 5)), 10);
  EXPECT_EQ(sigma_Tll1(2, make_rational(1, 3)), 2);
  for (long l = 1; l <= 6; ++l)
    for (long d = 2; d <= 30; ++d)
      for (long s = 1; s < d; ++s) {
        const Rational r = make_rational(s, d);
        EXPECT_EQ(sigma_Tll1(l, r), -oracle::torus_signature(l, l + 1, r));
      }
}

TEST(Torus, Profiles) {
  EXPECT_EQ(profile_T2(1), profile_from_jumps({{make_rational(1, 6), -2}, {make_rational(5, 6), 2}}));
  EXPECT_TRUE(profile_Tll1(1).is_zero());
  EXPECT_EQ(profile_Tll1(2).eval(make_rational(1, 6)), 1);
  for (long l = 2; l <= 6; ++l) {
    const SignatureProfile p = profile_Tll1(l);
    for (long v : p.plateaus()) EXPECT_GE(v, 0);
  }
}

TEST(Torus, SeifertT2n) {
  EXPECT_EQ(seifert_T2n(3).matrix(), (IntMatrix{{-1, 1}, {0, -1}}));
  EXPECT_EQ(seifert_T2n(5).size(), 4u);
  EXPECT_EQ(sigma_half(seifert_T2n(5)), -4);
  EXPECT_EQ(profile_from_seifert(seifert_T2n(7)).eval(make_rational(1, 3)), -4);
  for (long n = 3; n <= 11; n += 2) EXPECT_EQ(profile_from_seifert(seifert_T2n(n)), profile_T2((n - 1) / 2));
  EXPECT_THROW(seifert_T2n(4), Error);
}
