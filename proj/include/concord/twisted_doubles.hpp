#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "concord/casson_gordon.hpp"
#include "concord/torus_signatures.hpp"

namespace concord {

/// The k-twisted double D_k(K) together with the companion's profile.
struct DoubleSpec {
  long k = 0;
  SignatureProfile companion;
  /// 2 * min_{0<r<1} sigma_r(K).
  Rational companion_min;

  DoubleSpec(long twist, SignatureProfile profile);
};

/// [[-1, 1], [0, k]].
IntMatrix double_seifert(long k);
/// [[4k+1, 2k+1], [2k, k]], the same form in the basis x = (1,2), y = (0,1).
IntMatrix naik_basis_double(long k);

enum class LevineClass { InfiniteOrder, AlgSlice, Order2, Order4 };
std::string_view levine_name(LevineClass c) noexcept;
LevineClass levine_class(long k);

struct EigenVector {
  IntVector vector;
  Integer eigenvalue;
};

/// v+ = (l+1, 1) with eigenvalue -l and v- = (-l, 1) with eigenvalue l+1 for
/// the isometric structure of D_{l(l+1)}. Both are checked against G.
std::pair<EigenVector, EigenVector> eigen_metabolizers(long l);

/// T_{l,-l-1} # K.
SignatureProfile jx_profile_algslice(long l, const SignatureProfile& companion);
/// K(T_{2,2k+1}): companion pulled back with winding number 2.
SignatureProfile jx_profile_general(long k, const SignatureProfile& companion);

/// Naik data for D_k(K) in the basis {(1,2), (0,1)}; k >= 1.
Genus1Data naik_data(long k, const SignatureProfile& companion);

enum class EigenSign { Plus, Minus };

/// Naik data for D_{l(l+1)}(K) in the basis {v+, (-1,0)} or {v-, (-1,0)}.
Genus1Data algslice_data(long l, const SignatureProfile& companion, EigenSign sign);

/// 2 sigma_{2s/p}(K) + 2 sigma_{s/p}(T_{2,2k+1}) + 4 (s/p)(1 - s/p)(4k+1).
/// Throws BadPrime unless p is a prime dividing 4k+1.
Rational cg_double_q2(long k, const SignatureProfile& companion, const Integer& p,
                      const Integer& s);

/// sum_i sigma_{s_i/p}(T_{l,-l-1}) + sigma_{s_i/p}(K) with s_i from m+ = -l-1
/// or m- = l. Throws BadPrime unless p is a prime dividing (l+1)^q - l^q.
Rational cg_double_algslice(long l, const SignatureProfile& companion, unsigned long q,
                            const Integer& p, const Integer& s, EigenSign sign);

struct MinmaxResult {
  Rational min_value;
  /// Characters s/d with s/d <= 1/2 attaining the minimum.
  std::vector<Rational> argmin;
  /// M - 4/(4k+1).
  Rational bound;
  bool bound_ok = false;
  std::size_t characters = 0;
};

/// PrimePower: characters s/d with d a prime power dividing 4k+1. All: every
/// s/(4k+1), evaluated through 2 sigma_{2r}(K) + 2 sigma_r(T_{2,2k+1}) +
/// 4 r (1 - r)(4k+1).
enum class CharacterDomain { PrimePower, All };

/// Minimum of sigma_1 tau(D_k(K), chi_r) over the domain, r <= 1/2 (the
/// values are symmetric under r -> 1 - r).
MinmaxResult minmax_bounds(long k, const SignatureProfile& companion,
                           CharacterDomain domain = CharacterDomain::PrimePower);

/// Least k0 <= k_max such that sigma_1 tau(D_k(K), chi_{s/p}) > c0 for all
/// k in [k0, k_max] with p | 4k+1, where p = 4s +- 1.
std::optional<long> minmax_k0(const Integer& p, const Rational& c0,
                              const SignatureProfile& companion, long k_max);

struct EstimateResult {
  Integer s;
  Rational achieved;
  std::string method;
};

/// An s with sum_i sigma_{s_i/p}(T_{l,-l-1}) > q c0, by the coset
/// construction and, for small p, exhaustive search. Throws NoWitness.
EstimateResult estimate_b_search(long l, unsigned long q, const Integer& p, EigenSign sign,
                                 const Rational& c0);

enum class Verdict { InfiniteAlgebraicOrder, NonVanishing, Inconclusive };
std::string_view verdict_name(Verdict v) noexcept;

struct CertificateLine {
  std::string character;
  Rational value;
  /// The value is a lower bound rather than an exact evaluation.
  bool lower_bound = false;
  std::string justification;
};

struct ObstructionReport {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<CertificateLine> certificate;
};

/// Gilmer ribbon obstruction for n D_k(K) through q = 2 characters.
ObstructionReport ribbon_obstruction_verdict(long n, long k, const SignatureProfile& companion);

struct SliceOptions {
  unsigned long max_q = 97;
  std::vector<Integer> exclude_primes;
};

/// Slice obstruction for n D_{l(l+1)}(K) through odd prime q.
ObstructionReport slice_obstruction_verdict(long n, long l, const SignatureProfile& companion,
                                            const SliceOptions& options = {});

struct IndependenceEntry {
  long l = 0;
  long n = 1;
  bool nonsingular = false;
  ObstructionReport slice;
};

struct IndependenceReport {
  bool pairwise_coprime = false;
  std::vector<IndependenceEntry> entries;
  std::vector<long> certified;
  std::vector<long> inconclusive;
};

/// Throws DuplicateTwist when an l repeats.
IndependenceReport independence_certificate(const std::vector<std::pair<long, long>>& entries,
                                            const SignatureProfile& companion,
                                            const SliceOptions& options = {});

struct TableRow {
  long k = 0;
  /// r = s / (4k+1), kept unreduced.
  Integer s;
  Integer denominator;
  /// 1/2 sigma_1 tau(D_k(K), chi_r) - sigma_{2r}(K).
  Rational value;
};

/// Rows for s = 1 .. 2k whose reduced denominator is a prime power; k >= 1.
std::vector<TableRow> cg_table(long k, const SignatureProfile& companion);

}  // namespace concord
