#include "oracles.hpp"

#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace oracle {

Rational laplace_det(const RatRows& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    RatRows minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][c] * laplace_det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

RatRows rows_of(const IntMatrix& m) {
  RatRows out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

Rational charpoly_at(const IntMatrix& g, const Rational& x) {
  RatRows m = rows_of(g);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = (i == j ? x : Rational(0)) - m[i][j];
  return laplace_det(m);
}

Rational alexander_at(const IntMatrix& a, const Rational& t) {
  RatRows m = rows_of(a);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = Rational(a(i, j)) - t * a(j, i);
  return laplace_det(m);
}

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long deg(const RatPoly& p) { return static_cast<long>(p.size()) - 1; }

RatPoly remainder(RatPoly a, const RatPoly& b) {
  trim(a);
  while (deg(a) >= deg(b)) {
    const Rational factor = a.back() / b.back();
    const long shift = deg(a) - deg(b);
    for (long i = 0; i <= deg(b); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Rational power(const Rational& x, long e) {
  Rational out = 1;
  for (long i = 0; i < e; ++i) out *= x;
  return out;
}

Rational resultant_q(RatPoly f, RatPoly g) {
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return 0;
  if (deg(g) == 0) return power(g[0], deg(f));
  if (deg(f) == 0) return power(f[0], deg(g));
  if (deg(f) < deg(g)) {
    const Rational r = resultant_q(g, f);
    return (deg(f) * deg(g)) % 2 == 0 ? r : Rational(-r);
  }
  RatPoly r = remainder(f, g);
  if (r.empty()) return 0;
  Rational out = power(g.back(), deg(f) - deg(r)) * resultant_q(g, r);
  return (deg(f) * deg(g)) % 2 == 0 ? out : Rational(-out);
}

}  // namespace

Integer euclid_resultant(const std::vector<Integer>& f, const std::vector<Integer>& g) {
  RatPoly ff(f.begin(), f.end()), gg(g.begin(), g.end());
  const Rational r = resultant_q(ff, gg);
  return r.get_num();
}

std::vector<Integer> t_power_minus_one(unsigned long q) {
  std::vector<Integer> out(q + 1, Integer(0));
  out[0] = -1;
  out[q] = 1;
  return out;
}

long float_signature(const IntMatrix& a, double r) {
  const std::size_t n = a.rows();
  const std::complex<double> w = std::polar(1.0, 2 * M_PI * r);
  Eigen::MatrixXcd h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = (1.0 - w) * a(i, j).get_d() + (1.0 - std::conj(w)) * a(j, i).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  long sig = 0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double e = solver.eigenvalues()[i];
    if (e > 1e-9) ++sig;
    if (e < -1e-9) --sig;
  }
  return sig;
}

Rational torus_signature(long p, long q, const Rational& r) {
  long total = 0;
  for (long i = 1; i < p; ++i)
    for (long j = 1; j < q; ++j) {
      const Rational x = Rational(i, p) + Rational(j, q);
      Rational y = x;
      y.canonicalize();
      if (y > r && y < r + 1) --total;
      if (y < r || y > r + 1) ++total;
    }
  return Rational(total);
}

Rational naik_formula(const Integer& a, const Integer& m, long q, long d, long s,
                      const std::function<Rational(const Rational&)>& jx,
                      const std::function<Rational(const Rational&)>& knot) {
  const long mm = ((m.get_si() % d) + d) % d;
  long inv = -1;
  for (long x = 1; x < d; ++x)
    if ((mm * x) % d == 1) inv = x;
  if (inv < 0) return Rational(-999999);
  const long step = (1 + inv) % d;
  Rational total = 0;
  long si = ((s % d) + d) % d;
  for (long i = 0; i < q; ++i) {
    Rational r(si, d);
    r.canonicalize();
    Rational iq(i, q);
    iq.canonicalize();
    Rational quad(2 * (d - si) * si, d * d);
    quad.canonicalize();
    total += jx(r) + quad * a - knot(iq);
    si = (si * step) % d;
  }
  return total;
}

IntMatrix random_seifert(std::mt19937_64& rng, unsigned genus) {
  const std::size_t n = 2 * genus;
  std::uniform_int_distribution<int> entry(-3, 3);
  if (genus <= 2) {
    while (true) {
      IntMatrix a(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
      RatRows skew(n, std::vector<Rational>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) skew[i][j] = Rational(a(i, j) - a(j, i));
      if (laplace_det(skew) == 1) return a;
    }
  }
  std::uniform_int_distribution<int> shifted(-3, 2);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const bool symplectic = j == i + genus;
      a(i, j) = symplectic ? shifted(rng) : entry(rng);
      a(j, i) = a(i, j);
      if (symplectic) a(i, j) += 1;
    }
  return a;
}

Rational random_unit_rational(std::mt19937_64& rng, long max_den) {
  std::uniform_int_distribution<long> den(2, max_den);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(1, d - 1);
  Rational r(num(rng), d);
  r.canonicalize();
  return r;
}

}  // namespace oracle
