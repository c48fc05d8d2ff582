#include <gtest/gtest.h>

#include "concord/twisted_doubles.hpp"
#include "oracles.hpp"

using namespace concord;

namespace {

const SignatureProfile kUnknot;

SignatureProfile trefoil() { return profile_T2(1); }

// sigma_1 tau(D_k(K), chi_{s/d}) through the independent Naik evaluation.
Rational oracle_double(long k, const SignatureProfile& comp, long d, long s) {
  const Genus1Data data = naik_data(k, comp);
  auto jx = [&](const Rational& r) { return data.jx_profile.eval(r); };
  auto knot = [&](const Rational& r) { return data.knot_profile.eval(r); };
  return oracle::naik_formula(data.a, data.m, 2, d, s, jx, knot);
}

Rational g_bound(long k, const Rational& r) {
  return Rational(-2 * (4 * k + 1) * r * r + 4 * k * r - 1);
}

}  // namespace

TEST(Doubles, SeifertMatrices) {
  EXPECT_EQ(double_seifert(1), (IntMatrix{{-1, 1}, {0, 1}}));
  EXPECT_EQ(naik_basis_double(1), (IntMatrix{{5, 3}, {2, 1}}));
  EXPECT_EQ(double_seifert(0), (IntMatrix{{-1, 1}, {0, 0}}));
  const IntMatrix p{{1, 0}, {2, 1}};
  for (long k = -5; k <= 10; ++k)
    EXPECT_EQ(p.transpose() * double_seifert(k) * p, naik_basis_double(k));
}

TEST(Doubles, LevineClasses) {
  EXPECT_EQ(levine_class(-1), LevineClass::InfiniteOrder);
  EXPECT_EQ(levine_class(1), LevineClass::Order2);
  EXPECT_EQ(levine_class(5), LevineClass::Order4);
  EXPECT_EQ(levine_class(6), LevineClass::AlgSlice);
  EXPECT_EQ(levine_class(0), LevineClass::AlgSlice);
  EXPECT_EQ(levine_name(LevineClass::Order4), "Order4");
  for (long k = -50; k <= 200; ++k) {
    bool product = false;
    for (long l = 0; l * (l + 1) <= k; ++l) product = product || l * (l + 1) == k;
    const bool slice = levine_class(k) == LevineClass::AlgSlice;
    EXPECT_EQ(slice, product) << k;
    EXPECT_EQ(slice, !find_rank1_metabolizers(SeifertForm(double_seifert(k))).empty()) << k;
  }
}

TEST(Doubles, LevineOrderTwoCriterion) {
  // Every prime 3 mod 4 has even exponent in 4k+1 exactly for the Order2 and AlgSlice classes.
  for (long k = 1; k <= 200; ++k) {
    bool even = true;
    for (const auto& pp : factorize(Integer(4 * k + 1)))
      if (pp.prime % 4 == 3 && pp.exponent % 2 == 1) even = false;
    const LevineClass c = levine_class(k);
    EXPECT_EQ(even, c == LevineClass::Order2 || c == LevineClass::AlgSlice) << k;
  }
}

TEST(Doubles, EigenMetabolizers) {
  const auto [plus, minus] = eigen_metabolizers(2);
  EXPECT_EQ(plus.vector, (IntVector{3, 1}));
  EXPECT_EQ(plus.eigenvalue, -2);
  EXPECT_EQ(minus.vector, (IntVector{-2, 1}));
  EXPECT_EQ(minus.eigenvalue, 3);
  const auto [p0, m0] = eigen_metabolizers(0);
  EXPECT_EQ(p0.vector, (IntVector{1, 1}));
  EXPECT_EQ(p0.eigenvalue, 0);
  EXPECT_EQ(m0.vector, (IntVector{0, 1}));
  EXPECT_EQ(m0.eigenvalue, 1);
  // The D_2 eigenvectors are (2,1) and (-1,1); (1,1) is not one.
  const IntMatrix g = isometric_structure(SeifertForm(double_seifert(2)));
  EXPECT_EQ(g(0, 0) * 2 + g(0, 1), -2);
  EXPECT_EQ(g(1, 0) * 2 + g(1, 1), -1);
  EXPECT_NE(g(0, 0) + g(0, 1), g(1, 0) + g(1, 1));
}

TEST(Doubles, JxProfiles) {
  EXPECT_TRUE(jx_profile_algslice(1, kUnknot).is_zero());
  EXPECT_EQ(jx_profile_algslice(2, kUnknot), profile_Tll1(2));
  EXPECT_EQ(jx_profile_general(1, kUnknot), profile_T2(1));
  EXPECT_EQ(jx_profile_general(1, trefoil()).eval(make_rational(1, 12)), -1);
  for (long d = 2; d < 30; ++d)
    for (long s = 1; s < d; ++s) {
      const Rational r = make_rational(s, d);
      EXPECT_EQ(jx_profile_general(2, trefoil()).eval(r),
                trefoil().eval(frac(Rational(2 * r))) + oracle::torus_signature(2, 5, r));
    }
}

TEST(Doubles, CgDoubleQ2Examples) {
  EXPECT_EQ(cg_double_q2(1, kUnknot, 5, 1), make_rational(-4, 5));
  EXPECT_EQ(cg_double_q2(1, kUnknot, 5, 2), make_rational(4, 5));
  // 2 sigma_{1/3}(T_{2,5}) + 8 with sigma_{1/3}(T_{2,5}) = -4.
  EXPECT_EQ(oracle::torus_signature(2, 5, make_rational(1, 3)), -4);
  EXPECT_EQ(cg_double_q2(2, kUnknot, 3, 1), 0);
  EXPECT_EQ(sigma1_tau(naik_data(2, kUnknot), 2, 9, 2).value, make_rational(20, 9));
  try {
    cg_double_q2(1, kUnknot, 3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BadPrime);
  }
  EXPECT_THROW(cg_double_q2(1, kUnknot, 5, 5), Error);
}

TEST(Doubles, CgDoubleQ2MatchesNaikFormula) {
  EXPECT_EQ(sigma_half(SeifertForm(double_seifert(7))), 0);
  for (const auto& comp : {kUnknot, trefoil(), negate(trefoil())})
    for (long k = 1; k <= 20; ++k)
      for (const auto& pp : factorize(Integer(4 * k + 1))) {
        const long p = pp.prime.get_si();
        for (long s = 1; s < p; ++s) {
          const Rational v = cg_double_q2(k, comp, p, s);
          EXPECT_EQ(v, sigma1_tau(naik_data(k, comp), 2, p, s).value);
          EXPECT_EQ(v, oracle_double(k, comp, p, s));
        }
      }
}

TEST(Doubles, QuadraticLowerBound) {
  for (long k = 3; k <= 12; ++k) {
    const long p = 4 * k + 1;
    EXPECT_EQ(g_bound(k, make_rational(2 * k, p)), -1);
    EXPECT_EQ(g_bound(k, make_rational(1, p)), make_rational(-3, p));
    EXPECT_EQ(g_bound(k, make_rational(2 * k - 1, p)), make_rational(-3, p));
    EXPECT_EQ(g_bound(k, make_rational(2, p)), make_rational(4 * k - 9, p));
    EXPECT_EQ(g_bound(k, make_rational(2 * k - 2, p)), make_rational(4 * k - 9, p));
    for (const auto& pp : factorize(Integer(p)))
      for (unsigned e = 1; e <= pp.exponent; ++e) {
        const long d = ipow(pp.prime, e).get_si();
        for (long s = 1; 2 * s < d; ++s) {
          if (std::gcd(s, d) != 1) continue;
          const Rational r = make_rational(s, d);
          const Rational f = oracle_double(k, kUnknot, d, s) / 2;
          EXPECT_GE(f, g_bound(k, r)) << k << " " << s << "/" << d;
        }
      }
  }
}

TEST(Doubles, AlgsliceValues) {
  for (unsigned long q : {3UL, 5UL, 7UL}) {
    const Integer h = ipow(Integer(2), q) - 1;
    for (const auto& pp : factorize(h))
      for (long s = 1; s < pp.prime; ++s)
        for (EigenSign sign : {EigenSign::Plus, EigenSign::Minus}) {
          try {
            EXPECT_EQ(cg_double_algslice(1, kUnknot, q, pp.prime, s, sign), 0);
          } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::StepHitsZero);
          }
        }
  }
  Rational best = -1000;
  for (long s = 1; s < 19; ++s) best = std::max(best, cg_double_algslice(2, kUnknot, 3, 19, s, EigenSign::Plus));
  EXPECT_GE(best, 6);
  EXPECT_EQ(cg_double_algslice(2, kUnknot, 3, 19, 1, EigenSign::Plus), 4);
  try {
    cg_double_algslice(2, kUnknot, 3, 7, 1, EigenSign::Plus);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BadPrime);
  }
}

TEST(Doubles, AlgsliceMatchesNaikFormula) {
  for (long l = 1; l <= 4; ++l)
    for (EigenSign sign : {EigenSign::Plus, EigenSign::Minus}) {
      const Genus1Data data = algslice_data(l, trefoil(), sign);
      auto jx = [&](const Rational& r) { return data.jx_profile.eval(r); };
      auto knot = [&](const Rational& r) { return data.knot_profile.eval(r); };
      const Integer h = ipow(Integer(l + 1), 3) - ipow(Integer(l), 3);
      for (const auto& pp : factorize(h)) {
        const long p = pp.prime.get_si();
        for (long s = 1; s < p; ++s) {
          try {
            EXPECT_EQ(cg_double_algslice(l, trefoil(), 3, p, s, sign),
                      oracle::naik_formula(data.a, data.m, 3, p, s, jx, knot));
          } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::StepHitsZero);
          }
        }
      }
    }
}

TEST(Doubles, Minmax) {
  const MinmaxResult k3 = minmax_bounds(3, kUnknot);
  EXPECT_EQ(k3.min_value, make_rational(-4, 13));
  EXPECT_EQ(k3.argmin, (std::vector<Rational>{make_rational(1, 13)}));
  EXPECT_TRUE(k3.bound_ok);
  EXPECT_EQ(cg_double_q2(3, kUnknot, 13, 6), make_rational(12, 13));
  const MinmaxResult k10 = minmax_bounds(10, kUnknot);
  EXPECT_EQ(k10.min_value, make_rational(-4, 41));
  EXPECT_EQ(k10.argmin, (std::vector<Rational>{make_rational(1, 41)}));
  for (long s = 2; s < 40; ++s) EXPECT_GT(oracle_double(10, kUnknot, 41, s), 0);
  EXPECT_THROW(minmax_bounds(2, kUnknot), Error);
}

TEST(Doubles, MinmaxAgainstOracleSweep) {
  for (long k = 3; k <= 16; ++k) {
    Rational best = 1000;
    for (const auto& pp : factorize(Integer(4 * k + 1)))
      for (unsigned e = 1; e <= pp.exponent; ++e) {
        const long d = ipow(pp.prime, e).get_si();
        for (long s = 1; s < d; ++s)
          if (std::gcd(s, d) == 1) best = std::min(best, oracle_double(k, kUnknot, d, s));
      }
    EXPECT_EQ(minmax_bounds(k, kUnknot).min_value, best) << k;
  }
}

TEST(Doubles, MinmaxK0) {
  // p = 13 = 4 * 3 + 1, s = 3; k0 from the oracle over k with 13 | 4k + 1.
  const Rational c0 = 5;
  long k0 = 0;
  for (long k = 200; k >= 1; --k) {
    if ((4 * k + 1) % 13 != 0) continue;
    if (oracle_double(k, kUnknot, 13, 3) > c0)
      k0 = k;
    else
      break;
  }
  const auto found = minmax_k0(13, c0, kUnknot, 200);
  ASSERT_TRUE(found.has_value());
  EXPECT_LE(*found, k0);
  for (long k = *found; k <= 200; ++k)
    if ((4 * k + 1) % 13 == 0) EXPECT_GT(oracle_double(k, kUnknot, 13, 3), c0);
  EXPECT_EQ(*found, 4);
}

TEST(Doubles, EstimateSearch) {
  const EstimateResult r = estimate_b_search(2, 3, 19, EigenSign::Plus, 0);
  EXPECT_GT(r.achieved, 0);
  EXPECT_EQ(r.achieved, cg_double_algslice(2, kUnknot, 3, 19, r.s, EigenSign::Plus));
  for (long l = 2; l <= 5; ++l) {
    const Integer h = lucas_order(l * (l + 1), 3);
    const Integer root = integer_sqrt(h);
    for (const auto& pp : factorize(root)) {
      if (pp.prime < 19) continue;
      for (EigenSign sign : {EigenSign::Plus, EigenSign::Minus}) {
        const EstimateResult e = estimate_b_search(l, 3, pp.prime, sign, 1);
        EXPECT_GT(e.achieved, 3);
        EXPECT_EQ(e.achieved, cg_double_algslice(l, kUnknot, 3, pp.prime, e.s, sign));
      }
    }
  }
  try {
    estimate_b_search(2, 3, 19, EigenSign::Plus, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoWitness);
  }
}

TEST(Doubles, RibbonVerdicts) {
  for (long n = 1; n <= 4; ++n)
    EXPECT_EQ(ribbon_obstruction_verdict(n, 3, kUnknot).verdict, Verdict::NonVanishing);
  EXPECT_EQ(ribbon_obstruction_verdict(1, 1, kUnknot).verdict, Verdict::Inconclusive);
  EXPECT_EQ(ribbon_obstruction_verdict(1, -2, trefoil()).verdict, Verdict::InfiniteAlgebraicOrder);
  const ObstructionReport r = ribbon_obstruction_verdict(2, 3, kUnknot);
  EXPECT_FALSE(r.certificate.empty());
  EXPECT_EQ(verdict_name(Verdict::NonVanishing), "NonVanishing");
}

TEST(Doubles, SliceVerdicts) {
  EXPECT_EQ(slice_obstruction_verdict(1, 2, kUnknot).verdict, Verdict::NonVanishing);
  EXPECT_EQ(slice_obstruction_verdict(3, 2, kUnknot).verdict, Verdict::NonVanishing);
  EXPECT_EQ(slice_obstruction_verdict(1, 1, kUnknot).verdict, Verdict::Inconclusive);
  EXPECT_EQ(slice_obstruction_verdict(1, 0, kUnknot).verdict, Verdict::Inconclusive);
  EXPECT_EQ(slice_obstruction_verdict(2, 1, negate(trefoil())).verdict, Verdict::NonVanishing);
  SliceOptions opts;
  opts.max_q = 3;
  opts.exclude_primes = {Integer(19)};
  EXPECT_EQ(slice_obstruction_verdict(1, 2, kUnknot, opts).verdict, Verdict::Inconclusive);
}

TEST(Doubles, Independence) {
  const IndependenceReport r = independence_certificate({{2, 1}, {3, 1}, {4, 1}}, kUnknot);
  EXPECT_TRUE(r.pairwise_coprime);
  EXPECT_EQ(r.certified, (std::vector<long>{2, 3, 4}));
  EXPECT_TRUE(r.inconclusive.empty());
  for (const auto& e : r.entries) EXPECT_TRUE(e.nonsingular);
  const IndependenceReport zero = independence_certificate({{0, 1}}, kUnknot);
  EXPECT_EQ(zero.inconclusive, (std::vector<long>{0}));
  try {
    independence_certificate({{2, 1}, {2, 3}}, kUnknot);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DuplicateTwist);
  }
}

TEST(Doubles, Table) {
  const auto t1 = cg_table(1, kUnknot);
  ASSERT_EQ(t1.size(), 2u);
  EXPECT_EQ(t1[0].value, make_rational(-2, 5));
  EXPECT_EQ(t1[1].value, make_rational(2, 5));
  const auto t2 = cg_table(2, kUnknot);
  ASSERT_EQ(t2.size(), 4u);
  const std::vector<Rational> expected{make_rational(-2, 9), make_rational(10, 9), Rational(0), make_rational(4, 9)};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(t2[i].value, expected[i]);
    EXPECT_EQ(t2[i].s, static_cast<long>(i + 1));
    EXPECT_EQ(t2[i].denominator, 9);
  }
}

TEST(Doubles, MinmaxCharacterDomains) {
  // 4k+1 = 21: 1/21 is a character of N^2 but not of prime-power order.
  const MinmaxResult all = minmax_bounds(5, kUnknot, CharacterDomain::All);
  EXPECT_EQ(all.min_value, make_rational(-4, 21));
  EXPECT_EQ(all.argmin, (std::vector<Rational>{make_rational(1, 21)}));
  EXPECT_EQ(all.characters, 10u);
  const MinmaxResult pp = minmax_bounds(5, kUnknot);
  EXPECT_GT(pp.min_value, 0);
  EXPECT_TRUE(pp.bound_ok);
  for (long k = 3; k <= 12; ++k) {
    const MinmaxResult a = minmax_bounds(k, trefoil(), CharacterDomain::All);
    for (long s = 1; 2 * s < 4 * k + 1; ++s) {
      const Rational r = make_rational(s, 4 * k + 1);
      const Rational v = 2 * trefoil().eval(frac(Rational(2 * r))) +
                         2 * oracle::torus_signature(2, 2 * k + 1, r) + 4 * r * (1 - r) * (4 * k + 1);
      EXPECT_GE(v, a.min_value);
    }
    EXPECT_TRUE(a.bound_ok);
  }
}
