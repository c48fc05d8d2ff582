#include "concord/arith.hpp"

#include <algorithm>
#include <map>

#include "concord/errors.hpp"

namespace concord {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::OddSize: return "OddSize";
    case Errc::NotSquare: return "NotSquare";
    case Errc::NonUnimodularSkewPart: return "NonUnimodularSkewPart";
    case Errc::HeightTooLargeForBudget: return "HeightTooLargeForBudget";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ConstantPolynomial: return "ConstantPolynomial";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::SplitFailed: return "SplitFailed";
    case Errc::InvalidMetabolizer: return "InvalidMetabolizer";
    case Errc::AsymmetricJumps: return "AsymmetricJumps";
    case Errc::InvalidJump: return "InvalidJump";
    case Errc::InvalidProfile: return "InvalidProfile";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::RootIsolationFailure: return "RootIsolationFailure";
    case Errc::InfiniteHomology: return "InfiniteHomology";
    case Errc::MNotInvertible: return "MNotInvertible";
    case Errc::SNotCoprime: return "SNotCoprime";
    case Errc::StepHitsZero: return "StepHitsZero";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::NotNaikShape: return "NotNaikShape";
    case Errc::MixedQ: return "MixedQ";
    case Errc::BadPrime: return "BadPrime";
    case Errc::NoWitness: return "NoWitness";
    case Errc::DuplicateTwist: return "DuplicateTwist";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer parse_integer(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  const std::size_t start = (!s.empty() && s.front() == '-') ? 1 : 0;
  if (s.size() == start ||
      !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(Errc::ParseError, "not a decimal integer: '" + text + "'");
  }
  return Integer(s, 10);
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + text + "'");
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& r) { return r - Rational(floor(r)); }

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::optional<Integer> inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  return r;
}

Integer pow_mod(const Integer& base, const Integer& exp, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

// Brent's variant of Pollard rho; n is odd, composite, and > 1.
Integer pollard_rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) { return mod(v * v + c, n); };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mod(q * abs(Integer(x - y)), n);
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(Integer(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(Integer(n / d), out);
}

}  // namespace

std::vector<PrimePower> factorize(const Integer& n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cannot factor zero");
  Integer m = abs(n);
  std::map<Integer, unsigned> found;
  for (unsigned long p = 2; p < 10000 && Integer(p) * p <= m; ++p) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      ++found[Integer(p)];
      m /= p;
    }
  }
  factor_into(m, found);
  std::vector<PrimePower> out;
  for (const auto& [p, e] : found) out.push_back({p, e});
  return out;
}

std::optional<PrimePower> as_prime_power(const Integer& n) {
  if (n < 2) return std::nullopt;
  const auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::vector<Integer> prime_power_divisors(const Integer& n) {
  std::vector<Integer> out;
  if (abs(n) < 2) return out;
  for (const auto& pp : factorize(n)) {
    Integer q = pp.prime;
    for (unsigned e = 1; e <= pp.exponent; ++e, q *= pp.prime) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer integer_sqrt(const Integer& n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "square root of negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer multiplicative_order(const Integer& a, const Integer& p) {
  const Integer group = p - 1;
  Integer order = group;
  for (const auto& pp : factorize(group)) {
    for (unsigned e = 0; e < pp.exponent; ++e) {
      const Integer candidate = order / pp.prime;
      if (pow_mod(a, candidate, p) == 1) {
        order = candidate;
      } else {
        break;
      }
    }
  }
  return order;
}

}  // namespace concord
