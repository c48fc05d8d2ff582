#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "concord/arith.hpp"
#include "concord/errors.hpp"

namespace concord {

/// Dense univariate polynomial, coefficient i multiplies x^i. Always trimmed,
/// so the zero polynomial has no coefficients and degree -1.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly monomial(const T& v, std::size_t degree) {
    std::vector<T> c(degree + 1);
    c[degree] = v;
    return Poly(std::move(c));
  }

  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<T>& coeffs() const noexcept { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  template <class U>
  U eval(const U& x) const {
    U acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(d));
  }

  /// this(inner(x))
  Poly compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<T> c(a.c_);
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const T& s, const Poly& a) {
    std::vector<T> c(a.c_);
    for (auto& v : c) v *= s;
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Poly<Integer>;
using RatPolynomial = Poly<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);

/// Scales p to a primitive integer polynomial with positive leading coefficient.
IntPolynomial primitive_part(const RatPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);

/// Euclidean division over Q: a = q*b + r, deg r < deg b.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);

/// Monic gcd over Q (zero when both inputs are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);

/// Monic gcd g with u*a + v*b = g.
RatPolynomial extended_gcd(const RatPolynomial& a, const RatPolynomial& b, RatPolynomial& u,
                           RatPolynomial& v);

/// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
RatPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Exact division test over Q.
bool divides(const IntPolynomial& d, const IntPolynomial& p);

/// Exact quotient p / d over Z; throws InvalidArgument if d does not divide p.
IntPolynomial exact_quotient(const IntPolynomial& p, const IntPolynomial& d);

/// Product of the distinct irreducible factors of p, primitive.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Removes the largest power of x dividing p.
IntPolynomial strip_x_power(const IntPolynomial& p);

/// Determinant of the Sylvester matrix. Throws ConstantPolynomial when
/// either input has degree < 1.
Integer resultant(const IntPolynomial& f, const IntPolynomial& g);

IntPolynomial cyclotomic(unsigned long n);

/// For a palindromic p of even degree 2h: the Q with t^-h p(t) = Q(t + 1/t).
/// Throws InvalidArgument otherwise.
IntPolynomial palindromic_to_x(const IntPolynomial& p);

/// Minimal polynomial data for 2cos(2 pi s/d): palindromic_to_x(Phi_d), d >= 3.
IntPolynomial real_cyclotomic(unsigned long d);

/// C_w with C_w(t + 1/t) = t^w + t^-w.
IntPolynomial chebyshev_c(unsigned long w);

/// Sturm sequence of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);

  /// Number of distinct real roots in (a, b]; a < b.
  long count(const Rational& a, const Rational& b) const;

 private:
  long variations(const Rational& x) const;

  std::vector<RatPolynomial> seq_;
};

struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Disjoint intervals (lo, hi), ascending, each holding exactly one root of
/// the squarefree p inside the open interval (lo, hi); p is nonzero at every
/// endpoint.
std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p, const Rational& lo,
                                             const Rational& hi);

/// Halves an isolating interval of the squarefree p, keeping the root inside.
RootInterval refine_root(const IntPolynomial& p, const RootInterval& iv);

}  // namespace concord
