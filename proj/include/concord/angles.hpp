#pragma once

#include <variant>

#include "concord/arith.hpp"
#include "concord/polynomial.hpp"

namespace concord {

/// An angle r in (0,1) with x = 2cos(2 pi r) algebraic and irrational over the
/// cyclotomic values: x is the unique root of x_poly inside x_interval.
/// upper selects r in (1/2, 1) instead of (0, 1/2). [r_lo, r_hi] is a
/// certified enclosure of r itself.
struct AlgebraicAngle {
  IntPolynomial x_poly;
  RootInterval x_interval;
  bool upper = false;
  Rational r_lo;
  Rational r_hi;
};

/// Location of a signature jump: an exact rational or an algebraic angle.
class Breakpoint {
 public:
  explicit Breakpoint(Rational r) : v_(std::move(r)) {}
  explicit Breakpoint(AlgebraicAngle a) : v_(std::move(a)) {}

  /// Builds the enclosure for the root of x_poly in x_interval and refines it
  /// until r_hi - r_lo < 2^-min_bits.
  static Breakpoint algebraic(IntPolynomial x_poly, RootInterval x_interval, bool upper,
                              unsigned min_bits = 48);

  bool is_rational() const noexcept { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  const AlgebraicAngle& angle() const { return std::get<AlgebraicAngle>(v_); }

  /// Enclosure of r (both ends equal for rational breakpoints).
  Rational lower() const;
  Rational upper() const;

  /// 1 - r.
  Breakpoint mirror() const;
  /// (r + j) / w for w >= 1 and 0 <= j < w.
  Breakpoint pullback(unsigned long w, unsigned long j) const;

 private:
  std::variant<Rational, AlgebraicAngle> v_;
};

/// Sign of a - b; exact (refines enclosures as needed).
int compare(const Breakpoint& a, const Breakpoint& b);
int compare(const Breakpoint& a, const Rational& r);

inline bool operator==(const Breakpoint& a, const Breakpoint& b) { return compare(a, b) == 0; }

/// Halves the isolating interval and recomputes the enclosure.
void refine(AlgebraicAngle& a);

}  // namespace concord
