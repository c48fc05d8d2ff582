#include "concord/torus_signatures.hpp"

#include <numeric>

namespace concord {

namespace {

void require_coprime_positive(long m, long n) {
  if (m < 1 || n < 1 || std::gcd(m, n) != 1)
    throw Error(Errc::InvalidArgument, "torus parameters must be coprime and positive");
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Jump sum over locations strictly below r plus half the jump at r, r <= 1/2.
Rational cumulative(const JumpList& jumps, const Rational& r) {
  Rational acc = 0;
  for (const auto& j : jumps) {
    if (j.location < r) {
      acc += j.jump;
    } else {
      if (j.location == r) acc += make_rational(j.jump, 2);
      break;
    }
  }
  return acc;
}

Rational fold(const Rational& r) {
  if (r < 0 || r > 1) throw Error(Errc::OutOfRange, "r = " + to_string(r) + " is outside [0,1]");
  return r > Rational(1, 2) ? Rational(1 - r) : r;
}

}  // namespace

int jump_f(long m, long n, const Rational& r) {
  require_coprime_positive(m, n);
  if (r < 0 || r > 1) throw Error(Errc::OutOfRange, "r = " + to_string(r) + " is outside [0,1]");
  if (r > Rational(1, 2)) return -jump_f(m, n, Rational(1 - r));
  const Rational mnr = r * m * n;
  if (!is_integral(mnr) || is_integral(Rational(r * m)) || is_integral(Rational(r * n))) return 0;
  Integer u, v;
  ext_gcd(Integer(m), Integer(n), u, v);
  const Integer s = mnr.get_num();
  const Integer a = s * u;
  const Integer b = s * v;
  const Integer e = floor(make_rational(a, Integer(n))) + floor(make_rational(b, Integer(m)));
  return mpz_even_p(e.get_mpz_t()) ? 1 : -1;
}

JumpList torus_jumps(long m, long n) {
  require_coprime_positive(m, n);
  JumpList out;
  const long d = m * n;
  for (long s = 1; s < d; ++s) {
    const Rational r = make_rational(s, d);
    const int f = jump_f(m, n, r);
    if (f != 0) out.push_back({r, 2L * f});
  }
  return out;
}

Rational sigma_T2(long k, const Rational& r) {
  if (k < 0) throw Error(Errc::InvalidArgument, "sigma_T2 needs k >= 0");
  const Rational x = fold(r);
  const long n = 2 * k + 1;
  const Rational scaled = x * 2 * n;
  if (is_integral(scaled) && mpz_odd_p(scaled.get_num_mpz_t()))
    return cumulative(torus_jumps(2, n), x);
  return -2 * Rational(floor(Rational(x * n + Rational(1, 2))));
}

Rational sigma_Tll1(long l, const Rational& r) {
  if (l < 1) throw Error(Errc::InvalidArgument, "sigma_Tll1 needs l >= 1");
  const Rational x = fold(r);
  const long d = l * (l + 1);
  // Jumps sit at s/d; only those up to x contribute.
  const Integer limit = x.get_num() * d;
  long acc = 0;
  for (long s = 1; s < d; ++s) {
    const int c = cmp(Integer(s * x.get_den()), limit);
    if (c > 0) break;
    const long jump = 2L * jump_f(l, l + 1, make_rational(s, d));
    if (c == 0) return make_rational(-(2 * acc + jump), 2);
    acc += jump;
  }
  return Rational(-acc);
}

SignatureProfile profile_T2(long k) {
  if (k < 0) throw Error(Errc::InvalidArgument, "profile_T2 needs k >= 0");
  return profile_from_jumps(torus_jumps(2, 2 * k + 1));
}

SignatureProfile profile_Tll1(long l) {
  if (l < 1) throw Error(Errc::InvalidArgument, "profile_Tll1 needs l >= 1");
  return negate(profile_from_jumps(torus_jumps(l, l + 1)));
}

SeifertForm seifert_T2n(long n) {
  if (n < 3 || n % 2 == 0) throw Error(Errc::InvalidArgument, "seifert_T2n needs odd n >= 3");
  const auto size = static_cast<std::size_t>(n - 1);
  IntMatrix a(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    a(i, i) = -1;
    if (i + 1 < size) a(i, i + 1) = 1;
  }
  return SeifertForm(std::move(a));
}

}  // namespace concord
