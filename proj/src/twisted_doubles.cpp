#include "concord/twisted_doubles.hpp"

#include <algorithm>
#include <set>

namespace concord {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(Errc::InvalidArgument, message);
}

std::string character_name(const Integer& s, const Integer& d) {
  return "x (x) " + s.get_str() + "/" + d.get_str();
}

Integer torus_order(long l, unsigned long q) { return ipow(Integer(l + 1), q) - ipow(Integer(l), q); }

Integer sign_m(long l, EigenSign sign) { return sign == EigenSign::Plus ? Integer(-l - 1) : Integer(l); }

std::string_view sign_name(EigenSign sign) { return sign == EigenSign::Plus ? "+" : "-"; }

void require_algslice_prime(long l, unsigned long q, const Integer& p) {
  const Integer h = torus_order(l, q);
  if (!is_prime(p) || mpz_divisible_p(h.get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error(Errc::BadPrime, p.get_str() + " is not a prime dividing " + h.get_str());
}

// Primes of h found by trial division up to `bound`, plus a prime cofactor.
std::vector<Integer> usable_primes(Integer h, unsigned long bound) {
  std::vector<Integer> out;
  for (unsigned long p = 2; p <= bound && h > 1; ++p) {
    if (mpz_divisible_ui_p(h.get_mpz_t(), p) == 0) continue;
    out.emplace_back(p);
    while (mpz_divisible_ui_p(h.get_mpz_t(), p) != 0) h /= p;
  }
  if (h > 1 && is_prime(h)) out.push_back(h);
  return out;
}

Rational orbit_sum(const SignatureProfile& profile, const Integer& m, const Integer& p,
                   const Integer& s, unsigned long q) {
  Rational total = 0;
  for (const auto& si : s_sequence(m, p, s, q)) total += profile.eval(make_rational(si, p));
  return total;
}

struct Sweep {
  Rational min_value;
  std::vector<Rational> argmin;
  std::size_t characters = 0;
};

void record(Sweep& out, const Rational& v, const Rational& r) {
  if (out.characters == 0 || v < out.min_value) {
    out.min_value = v;
    out.argmin.clear();
  }
  if (v == out.min_value) out.argmin.push_back(r);
  ++out.characters;
}

// Characters s/d, s/d <= 1/2, of D_k(K) for q = 2: prime-power d | 4k+1
// through sigma1_tau, or every s/(4k+1) through the reduced q = 2 expression.
Sweep sweep_q2(long k, const SignatureProfile& companion, CharacterDomain domain) {
  Sweep out;
  if (domain == CharacterDomain::All) {
    const long n = 4 * k + 1;
    const SignatureProfile torus = profile_T2(k);
    for (long s = 1; 2 * s < n; ++s) {
      const Rational r = make_rational(s, n);
      const Rational v = 2 * companion.eval(frac(Rational(2 * r))) + 2 * torus.eval(r) + 4 * r * (1 - r) * n;
      record(out, v, r);
    }
  } else {
    const Genus1Data data = naik_data(k, companion);
    for (const auto& d : prime_power_divisors(Integer(4 * k + 1)))
      for (Integer s = 1; 2 * s < d; ++s)
        if (gcd(s, d) == 1) record(out, sigma1_tau(data, 2, d, s).value, make_rational(s, d));
  }
  std::sort(out.argmin.begin(), out.argmin.end());
  return out;
}

// s with p = 4s + 1 or p = 4s - 1.
Integer quarter_index(const Integer& p) {
  const Integer r = mod(p, 4);
  return r == 1 ? Integer((p - 1) / 4) : Integer((p + 1) / 4);
}

}  // namespace

DoubleSpec::DoubleSpec(long twist, SignatureProfile profile)
    : k(twist), companion(std::move(profile)), companion_min(2 * companion.min_plateau()) {}

IntMatrix double_seifert(long k) { return IntMatrix{{-1, 1}, {0, k}}; }

IntMatrix naik_basis_double(long k) { return IntMatrix{{4 * k + 1, 2 * k + 1}, {2 * k, k}}; }

std::string_view levine_name(LevineClass c) noexcept {
  switch (c) {
    case LevineClass::InfiniteOrder: return "InfiniteOrder";
    case LevineClass::AlgSlice: return "AlgSlice";
    case LevineClass::Order2: return "Order2";
    case LevineClass::Order4: return "Order4";
  }
  return "?";
}

LevineClass levine_class(long k) {
  if (k < 0) return LevineClass::InfiniteOrder;
  const Integer n = 4 * k + 1;
  if (is_perfect_square(n)) return LevineClass::AlgSlice;
  for (const auto& pp : factorize(n))
    if (mod(pp.prime, 4) == 3 && pp.exponent % 2 == 1) return LevineClass::Order4;
  return LevineClass::Order2;
}

std::pair<EigenVector, EigenVector> eigen_metabolizers(long l) {
  require(l >= 0, "eigen_metabolizers needs l >= 0");
  const IntMatrix g = isometric_structure(SeifertForm(double_seifert(l * (l + 1))));
  EigenVector plus{{Integer(l + 1), Integer(1)}, Integer(-l)};
  EigenVector minus{{Integer(-l), Integer(1)}, Integer(l + 1)};
  for (const auto* v : {&plus, &minus}) {
    IntVector expected = v->vector;
    for (auto& c : expected) c *= v->eigenvalue;
    if (g * v->vector != expected)
      throw Error(Errc::HypothesisViolated, "eigenvector check failed");
  }
  return {plus, minus};
}

SignatureProfile jx_profile_algslice(long l, const SignatureProfile& companion) {
  require(l >= 1, "jx_profile_algslice needs l >= 1");
  return add(profile_Tll1(l), companion);
}

SignatureProfile jx_profile_general(long k, const SignatureProfile& companion) {
  require(k >= 0, "jx_profile_general needs k >= 0");
  return satellite_pullback(companion, 2, profile_T2(k));
}

Genus1Data naik_data(long k, const SignatureProfile& companion) {
  require(k >= 1, "naik_data needs k >= 1");
  return Genus1Data::from_matrix(naik_basis_double(k),
                                 profile_from_seifert(SeifertForm(double_seifert(k))),
                                 jx_profile_general(k, companion));
}

Genus1Data algslice_data(long l, const SignatureProfile& companion, EigenSign sign) {
  require(l >= 1, "algslice_data needs l >= 1");
  const IntMatrix a = sign == EigenSign::Plus ? IntMatrix{{0, l + 1}, {l, -1}}
                                              : IntMatrix{{0, -l}, {-l - 1, -1}};
  return Genus1Data::from_matrix(a, profile_from_seifert(SeifertForm(double_seifert(l * (l + 1)))),
                                 jx_profile_algslice(l, companion));
}

Rational cg_double_q2(long k, const SignatureProfile& companion, const Integer& p,
                      const Integer& s) {
  require(k >= 1, "cg_double_q2 needs k >= 1");
  const Integer n = 4 * k + 1;
  if (!is_prime(p) || mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error(Errc::BadPrime, p.get_str() + " is not a prime dividing " + n.get_str());
  if (s <= 0 || s >= p) throw Error(Errc::OutOfRange, "s must satisfy 0 < s < p");
  const Rational r = make_rational(s, p);
  return 2 * companion.eval(frac(Rational(2 * r))) + 2 * sigma_T2(k, r) +
         4 * r * (1 - r) * Rational(n);
}

Rational cg_double_algslice(long l, const SignatureProfile& companion, unsigned long q,
                            const Integer& p, const Integer& s, EigenSign sign) {
  require(l >= 1, "cg_double_algslice needs l >= 1");
  if (!as_prime_power(Integer(q)))
    throw Error(Errc::NotPrimePower, "q = " + std::to_string(q) + " is not a prime power");
  require_algslice_prime(l, q, p);
  Rational total = 0;
  for (const auto& si : s_sequence(sign_m(l, sign), p, s, q)) {
    const Rational r = make_rational(si, p);
    total += sigma_Tll1(l, r) + companion.eval(r);
  }
  return total;
}

MinmaxResult minmax_bounds(long k, const SignatureProfile& companion, CharacterDomain domain) {
  require(k >= 3, "minmax_bounds needs k >= 3");
  const Sweep sweep = sweep_q2(k, companion, domain);
  MinmaxResult out;
  out.min_value = sweep.min_value;
  out.argmin = sweep.argmin;
  out.characters = sweep.characters;
  out.bound = DoubleSpec(k, companion).companion_min - make_rational(4, 4 * k + 1);
  out.bound_ok = out.min_value >= out.bound;
  return out;
}

std::optional<long> minmax_k0(const Integer& p, const Rational& c0,
                              const SignatureProfile& companion, long k_max) {
  if (!is_prime(p) || p == 2) throw Error(Errc::BadPrime, p.get_str() + " is not an odd prime");
  const Integer s = quarter_index(p);
  std::optional<long> last_fail;
  bool any = false;
  for (long k = 1; k <= k_max; ++k) {
    if (mpz_divisible_p(Integer(4 * k + 1).get_mpz_t(), p.get_mpz_t()) == 0) continue;
    any = true;
    if (cg_double_q2(k, companion, p, s) <= c0) last_fail = k;
  }
  if (!any) return std::nullopt;
  const long k0 = last_fail ? *last_fail + 1 : 1;
  if (k0 > k_max) return std::nullopt;
  return k0;
}

EstimateResult estimate_b_search(long l, unsigned long q, const Integer& p, EigenSign sign,
                                 const Rational& c0) {
  require(l >= 2, "estimate_b_search needs l >= 2");
  require_algslice_prime(l, q, p);
  const SignatureProfile torus = profile_Tll1(l);
  const Integer m = sign_m(l, sign);
  const Integer a = mod(Integer(1 + *inverse_mod(m, p)), p);
  const Rational target = Rational(static_cast<long>(q)) * c0;

  const Integer order = multiplicative_order(a, p);
  if (p <= 2'000'000 && order * q <= 5'000'000) {
    const unsigned long pp = p.get_ui();
    const unsigned long e = order.get_ui();
    auto in_p = [&](const Integer& x) { return 4 * x >= p && 4 * x <= 3 * p; };
    std::vector<bool> seen(pp, false);
    std::optional<Integer> z1;
    for (unsigned long z = 1; z < pp && !z1; ++z) {
      if (seen[z]) continue;
      Integer x = z;
      unsigned long hits = 0;
      for (unsigned long i = 0; i < e; ++i) {
        seen[x.get_ui()] = true;
        if (in_p(x)) ++hits;
        x = mod(Integer(x * a), p);
      }
      if (2 * hits >= e) z1 = Integer(z);
    }
    if (z1) {
      Integer best_s = *z1, s = *z1;
      unsigned long best_hits = 0;
      for (unsigned long d0 = 0; d0 < e; ++d0) {
        unsigned long hits = 0;
        Integer x = s;
        for (unsigned long i = 0; i < q; ++i) {
          if (in_p(x)) ++hits;
          x = mod(Integer(x * a), p);
        }
        if (hits > best_hits) {
          best_hits = hits;
          best_s = s;
        }
        s = mod(Integer(s * a), p);
      }
      const Rational achieved = orbit_sum(torus, m, p, best_s, q);
      if (achieved > target) return {best_s, achieved, "coset construction"};
    }
  }

  if (p <= 100'000) {
    std::optional<EstimateResult> best;
    for (Integer s = 1; s < p; ++s) {
      const Rational v = orbit_sum(torus, m, p, s, q);
      if (!best || v > best->achieved) best = EstimateResult{s, v, "exhaustive"};
    }
    if (best && best->achieved > target) return *best;
  }
  throw Error(Errc::NoWitness, "no s with orbit sum above " + to_string(target) + " for l = " +
                                   std::to_string(l) + ", q = " + std::to_string(q) +
                                   ", p = " + p.get_str() + ", sign " + std::string(sign_name(sign)));
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::InfiniteAlgebraicOrder: return "InfiniteAlgebraicOrder";
    case Verdict::NonVanishing: return "NonVanishing";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

ObstructionReport ribbon_obstruction_verdict(long n, long k, const SignatureProfile& companion) {
  require(n >= 1, "n must be positive");
  ObstructionReport out;
  if (k < 0) {
    out.verdict = Verdict::InfiniteAlgebraicOrder;
    out.certificate.push_back({"none", Rational(0), false, "k < 0: Alexander polynomial not a norm"});
    return out;
  }
  if (k == 0) {
    out.certificate.push_back({"none", Rational(0), false, "4k+1 = 1 has no prime divisor"});
    return out;
  }
  const Sweep sweep = sweep_q2(k, companion, CharacterDomain::PrimePower);
  const Rational floor_value = std::min(sweep.min_value, Rational(0));
  for (const auto& pp : factorize(Integer(4 * k + 1))) {
    const Integer& p = pp.prime;
    const Integer s = quarter_index(p);
    const Rational v = cg_double_q2(k, companion, p, s);
    bool ok = true;
    for (long n0 = 0; 2 * n0 <= n && ok; ++n0) ok = (n - n0) * v + n0 * floor_value > 0;
    if (!ok) {
      out.certificate.push_back({character_name(s, p), v, false,
                                 "structured character value does not dominate the floor"});
      continue;
    }
    out.verdict = Verdict::NonVanishing;
    out.certificate.push_back({character_name(s, p), v, false, "structured character, p = 4s +- 1"});
    out.certificate.push_back({"any prime-power character", floor_value, true,
                               "min(0, least sigma_1 tau over the character sweep)"});
    out.certificate.push_back(
        {"n copies", Rational(n - n / 2) * v + Rational(n / 2) * floor_value, true,
         "(n - n0) V + n0 floor > 0 for every n0 <= n/2"});
    return out;
  }
  return out;
}

ObstructionReport slice_obstruction_verdict(long n, long l, const SignatureProfile& companion,
                                            const SliceOptions& options) {
  require(n >= 1, "n must be positive");
  require(l >= 0, "l must be non-negative");
  ObstructionReport out;
  if (l == 0) {
    out.certificate.push_back({"none", Rational(0), false, "(l+1)^q - l^q = 1 has no prime divisor"});
    return out;
  }
  const std::set<Integer> excluded(options.exclude_primes.begin(), options.exclude_primes.end());
  const SignatureProfile jx = jx_profile_algslice(l, companion);
  const Rational c0 = abs(Rational(2 * companion.min_plateau())) * 2;
  const Rational term_floor = std::min(Rational(companion.min_plateau()), Rational(0));

  for (unsigned long q = 3; q <= options.max_q; q += 2) {
    if (!is_prime(Integer(q))) continue;
    for (const auto& p : usable_primes(torus_order(l, q), 1'000'000)) {
      if (excluded.count(p) != 0) continue;
      std::vector<CertificateLine> lines;
      bool both = true;
      for (const EigenSign sign : {EigenSign::Plus, EigenSign::Minus}) {
        const Integer m = sign_m(l, sign);
        Rational floor_value = Rational(static_cast<long>(q)) * term_floor;
        std::string floor_note = "torus terms are non-negative";
        if (p * q <= 200'000) {
          floor_value = 0;
          for (Integer s = 1; s < p; ++s) floor_value = std::min(floor_value, orbit_sum(jx, m, p, s, q));
          floor_note = "exhaustive over s";
        }
        std::vector<std::pair<Integer, std::string>> candidates;
        if (l >= 2) {
          try {
            candidates.emplace_back(estimate_b_search(l, q, p, sign, c0).s, "coset construction");
          } catch (const Error&) {
          }
        }
        candidates.emplace_back(Integer(p / 2), "s = floor(p/2)");
        if (p <= 20'000) {
          std::optional<std::pair<Integer, Rational>> best;
          for (Integer s = 1; s < p; ++s) {
            const Rational v = orbit_sum(jx, m, p, s, q);
            if (!best || v > best->second) best = std::make_pair(s, v);
          }
          candidates.emplace_back(best->first, "exhaustive");
        }
        bool certified = false;
        for (const auto& [s, how] : candidates) {
          const Rational v = orbit_sum(jx, m, p, s, q);
          bool ok = true;
          for (long e = (n + 1) / 2; e <= n && ok; ++e) ok = e * v + (n - e) * floor_value > 0;
          if (!ok) continue;
          const std::string tag = "q = " + std::to_string(q) + ", sign " + std::string(sign_name(sign));
          lines.push_back({"v" + std::string(sign_name(sign)) + " (x) " + s.get_str() + "/" + p.get_str(),
                           v, false, tag + ", " + how});
          lines.push_back({"remaining coordinates", floor_value, true, tag + ", " + floor_note});
          certified = true;
          break;
        }
        if (!certified) {
          both = false;
          break;
        }
      }
      if (both) {
        out.verdict = Verdict::NonVanishing;
        out.certificate = std::move(lines);
        return out;
      }
    }
  }
  out.certificate.push_back({"none", Rational(0), false,
                             "no certified character for odd prime q <= " + std::to_string(options.max_q)});
  return out;
}

IndependenceReport independence_certificate(const std::vector<std::pair<long, long>>& entries,
                                            const SignatureProfile& companion,
                                            const SliceOptions& options) {
  std::set<long> seen;
  for (const auto& [l, n] : entries)
    if (!seen.insert(l).second) throw Error(Errc::DuplicateTwist, "l = " + std::to_string(l) + " repeats");
  IndependenceReport out;
  out.pairwise_coprime = true;
  std::vector<IntPolynomial> alex;
  for (const auto& [l, n] : entries) alex.push_back(alexander(SeifertForm(double_seifert(l * (l + 1)))));
  for (std::size_t i = 0; i < alex.size(); ++i)
    for (std::size_t j = i + 1; j < alex.size(); ++j)
      if (!alexander_coprime(alex[i], alex[j])) out.pairwise_coprime = false;
  for (const auto& [l, n] : entries) {
    IndependenceEntry e;
    e.l = l;
    e.n = n;
    e.nonsingular = determinant(double_seifert(l * (l + 1))) != 0;
    e.slice = slice_obstruction_verdict(n, l, companion, options);
    const bool ok = out.pairwise_coprime && e.nonsingular && e.slice.verdict == Verdict::NonVanishing;
    (ok ? out.certified : out.inconclusive).push_back(l);
    out.entries.push_back(std::move(e));
  }
  return out;
}

std::vector<TableRow> cg_table(long k, const SignatureProfile& companion) {
  require(k >= 1, "cg_table needs k >= 1");
  const Genus1Data data = naik_data(k, companion);
  const Integer n = 4 * k + 1;
  std::vector<TableRow> out;
  for (Integer s = 1; s <= 2 * k; ++s) {
    const Rational r = make_rational(s, n);
    const Integer d = r.get_den();
    if (!as_prime_power(d)) continue;
    const Rational value = sigma1_tau(data, 2, d, r.get_num()).value / 2 -
                           companion.eval(frac(Rational(2 * r)));
    out.push_back({k, s, n, value});
  }
  return out;
}

}  // namespace concord
