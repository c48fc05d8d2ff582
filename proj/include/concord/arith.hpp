#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace concord {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "n", "-n", "n/d" with arbitrary-size decimal digits.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

Integer floor(const Rational& r);
/// Representative of r mod 1 in [0, 1).
Rational frac(const Rational& r);

/// Non-negative residue of a mod m (m > 0).
Integer mod(const Integer& a, const Integer& m);
std::optional<Integer> inverse_mod(const Integer& a, const Integer& m);
Integer pow_mod(const Integer& base, const Integer& exp, const Integer& m);
Integer ipow(const Integer& base, unsigned long exp);

/// Extended gcd: returns g and sets x, y with a*x + b*y = g >= 0.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y);

bool is_prime(const Integer& n);

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
};

/// Factorization of |n| (n != 0) into ascending prime powers.
std::vector<PrimePower> factorize(const Integer& n);

/// (p, e) when n = p^e with p prime and e >= 1.
std::optional<PrimePower> as_prime_power(const Integer& n);

/// All divisors d > 1 of |n| that are prime powers, ascending.
std::vector<Integer> prime_power_divisors(const Integer& n);

Integer integer_sqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

/// Multiplicative order of a modulo prime p (a coprime to p).
Integer multiplicative_order(const Integer& a, const Integer& p);

}  // namespace concord
