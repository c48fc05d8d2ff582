#include "concord/polynomial.hpp"

#include <algorithm>

#include "concord/matrix.hpp"

namespace concord {

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  Integer den = 1;
  for (const auto& v : p.coeffs()) den = lcm(den, Integer(v.get_den()));
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(Integer(v.get_num() * (den / v.get_den())));
  return primitive_part(IntPolynomial(std::move(c)));
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  Integer g = 0;
  for (const auto& v : p.coeffs()) g = gcd(g, v);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(Integer(v / g));
  return IntPolynomial(std::move(c));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {RatPolynomial{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto db = static_cast<std::size_t>(b.degree());
  const Rational lead = b.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational f = rem[k + db] / lead;
    quo[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
}

namespace {

RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  return Rational(1 / p.leading()) * p;
}

}  // namespace

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RatPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = make_monic(r);
  }
  return make_monic(x);
}

RatPolynomial extended_gcd(const RatPolynomial& a, const RatPolynomial& b, RatPolynomial& u,
                           RatPolynomial& v) {
  RatPolynomial r0 = a, r1 = b;
  RatPolynomial s0 = RatPolynomial::constant(1), s1;
  RatPolynomial t0, t1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s2 = s0 - q * s1;
    RatPolynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    u = RatPolynomial{};
    v = RatPolynomial{};
    return r0;
  }
  const Rational inv = 1 / r0.leading();
  u = inv * s0;
  v = inv * t0;
  return inv * r0;
}

RatPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw Error(Errc::InvalidArgument, "interpolation size mismatch");
  // Newton divided differences.
  std::vector<Rational> dd = ys;
  for (std::size_t k = 1; k < xs.size(); ++k)
    for (std::size_t i = xs.size() - 1; i >= k; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
      if (i == k) break;
    }
  RatPolynomial out;
  for (std::size_t i = xs.size(); i-- > 0;)
    out = out * RatPolynomial(std::vector<Rational>{Rational(-xs[i]), Rational(1)}) +
          RatPolynomial::constant(dd[i]);
  return out;
}

bool divides(const IntPolynomial& d, const IntPolynomial& p) {
  return divmod(to_rational(p), to_rational(d)).second.is_zero();
}

IntPolynomial exact_quotient(const IntPolynomial& p, const IntPolynomial& d) {
  auto [q, r] = divmod(to_rational(p), to_rational(d));
  if (!r.is_zero()) throw Error(Errc::InvalidArgument, "polynomial does not divide");
  std::vector<Integer> c;
  for (const auto& v : q.coeffs()) {
    if (v.get_den() != 1) throw Error(Errc::InvalidArgument, "quotient is not integral");
    c.push_back(v.get_num());
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree part of zero");
  if (p.degree() == 0) return IntPolynomial{1};
  const RatPolynomial rp = to_rational(p);
  const RatPolynomial g = gcd(rp, rp.derivative());
  return primitive_part(divmod(rp, g).first);
}

IntPolynomial strip_x_power(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  std::size_t k = 0;
  while (p.coeffs()[k] == 0) ++k;
  return IntPolynomial(std::vector<Integer>(p.coeffs().begin() + static_cast<long>(k), p.coeffs().end()));
}

Integer resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.degree() < 1 || g.degree() < 1)
    throw Error(Errc::ConstantPolynomial, "resultant needs nonconstant polynomials");
  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  IntMatrix s(m + n, m + n);
  // Rows hold coefficients from the leading term down.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s(i, i + j) = f.coeffs()[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s(n + i, i + j) = g.coeffs()[n - j];
  return determinant(s);
}

namespace {

int moebius(unsigned long n) {
  int mu = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

IntPolynomial cyclotomic(unsigned long n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cyclotomic index must be positive");
  IntPolynomial num{1}, den{1};
  for (unsigned long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = moebius(n / d);
    if (mu == 0) continue;
    const IntPolynomial f = IntPolynomial::monomial(1, d) - IntPolynomial{1};
    if (mu > 0) {
      num = num * f;
    } else {
      den = den * f;
    }
  }
  IntPolynomial out = exact_quotient(num, den);
  if (out.leading() < 0) out = -out;
  return out;
}

IntPolynomial chebyshev_c(unsigned long w) {
  IntPolynomial prev{2}, cur{0, 1};
  if (w == 0) return prev;
  const IntPolynomial x{0, 1};
  for (unsigned long i = 1; i < w; ++i) {
    IntPolynomial next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPolynomial palindromic_to_x(const IntPolynomial& p) {
  if (p.is_zero() || p.degree() % 2 != 0)
    throw Error(Errc::InvalidArgument, "expected a palindromic polynomial of even degree");
  const auto deg = static_cast<std::size_t>(p.degree());
  for (std::size_t i = 0; i <= deg; ++i)
    if (p.coeffs()[i] != p.coeffs()[deg - i])
      throw Error(Errc::InvalidArgument, "polynomial is not palindromic");
  const std::size_t h = deg / 2;
  IntPolynomial q = IntPolynomial::constant(p.coeffs()[h]);
  for (std::size_t j = 1; j <= h; ++j) q = q + p.coeffs()[h + j] * chebyshev_c(j);
  return q;
}

IntPolynomial real_cyclotomic(unsigned long d) {
  if (d < 3) throw Error(Errc::InvalidArgument, "real cyclotomic polynomial needs d >= 3");
  return palindromic_to_x(cyclotomic(d));
}

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "Sturm sequence of zero");
  seq_.push_back(to_rational(p));
  seq_.push_back(seq_.back().derivative());
  while (!seq_.back().is_zero()) {
    RatPolynomial r = divmod(seq_[seq_.size() - 2], seq_.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps the sign pattern and the coefficients small.
    seq_.push_back(-to_rational(primitive_part(r)));
    if (r.leading() < 0) seq_.back() = -seq_.back();
  }
  if (seq_.back().is_zero()) seq_.pop_back();
}

long SturmSequence::variations(const Rational& x) const {
  long changes = 0;
  int last = 0;
  for (const auto& f : seq_) {
    const int s = sgn(f.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

long SturmSequence::count(const Rational& a, const Rational& b) const {
  return variations(a) - variations(b);
}

namespace {

Rational nonroot_split(const IntPolynomial& p, const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  Rational step = (b - a) / 8;
  while (p.eval(m) == 0) {
    m = (a + b) / 2 + step;
    step /= 2;
  }
  return m;
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p, const Rational& lo,
                                             const Rational& hi) {
  if (p.eval(lo) == 0 || p.eval(hi) == 0)
    throw Error(Errc::InvalidArgument, "isolation interval endpoint is a root");
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  const SturmSequence sturm(p);
  std::vector<RootInterval> stack{{lo, hi}};
  while (!stack.empty()) {
    const RootInterval iv = stack.back();
    stack.pop_back();
    const long n = sturm.count(iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(iv);
      continue;
    }
    const Rational m = nonroot_split(p, iv.lo, iv.hi);
    stack.push_back({m, iv.hi});
    stack.push_back({iv.lo, m});
  }
  return out;
}

RootInterval refine_root(const IntPolynomial& p, const RootInterval& iv) {
  const Rational m = (iv.lo + iv.hi) / 2;
  const int sm = sgn(p.eval(m));
  if (sm == 0) {
    const Rational w = (iv.hi - iv.lo) / 4;
    return {m - w, m + w};
  }
  if (sgn(p.eval(iv.lo)) != sm) return {iv.lo, m};
  return {m, iv.hi};
}

}  // namespace concord
