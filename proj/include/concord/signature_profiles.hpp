#pragma once

#include <vector>

#include "concord/angles.hpp"
#include "concord/core_forms.hpp"

namespace concord {

/// Piecewise-constant signature function on (0,1). plateaus[i] is the value
/// between breakpoints i-1 and i; at a breakpoint the value is the average of
/// its two neighbours.
class SignatureProfile {
 public:
  /// The zero profile.
  SignatureProfile() : plateaus_{0} {}
  /// Throws InvalidProfile unless the breakpoints increase strictly inside
  /// (0,1), plateaus are even, the first is zero and the data is symmetric
  /// under r -> 1 - r.
  SignatureProfile(std::vector<Breakpoint> breakpoints, std::vector<long> plateaus);

  const std::vector<Breakpoint>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<long>& plateaus() const noexcept { return plateaus_; }

  /// Averaged value at r in [0,1]; 0 at both ends. Throws OutOfRange.
  Rational eval(const Rational& r) const;
  /// Value at an arbitrary breakpoint location.
  Rational eval(const Breakpoint& b) const;

  /// Least plateau value (averages never go below it).
  long min_plateau() const;

  /// Drops breakpoints across which the value does not change.
  SignatureProfile normalized() const;

  bool is_zero() const;

  friend bool operator==(const SignatureProfile& a, const SignatureProfile& b);

 private:
  struct Unchecked {};
  SignatureProfile(Unchecked, std::vector<Breakpoint> breakpoints, std::vector<long> plateaus)
      : breakpoints_(std::move(breakpoints)), plateaus_(std::move(plateaus)) {}

  friend SignatureProfile add(const SignatureProfile&, const SignatureProfile&);
  friend SignatureProfile negate(const SignatureProfile&);
  friend SignatureProfile satellite_pullback(const SignatureProfile&, unsigned long,
                                             const SignatureProfile&);
  friend SignatureProfile profile_from_seifert(const SeifertForm&);

  std::vector<Breakpoint> breakpoints_;
  std::vector<long> plateaus_;
};

struct Jump {
  Rational location;
  long jump = 0;
};
using JumpList = std::vector<Jump>;

/// Cumulative sum of the jumps. Throws InvalidJump (zero or odd jump, location
/// outside (0,1) or not increasing) and AsymmetricJumps (a jump at l without
/// the opposite jump at 1 - l).
SignatureProfile profile_from_jumps(const JumpList& jumps);

SignatureProfile add(const SignatureProfile& a, const SignatureProfile& b);
SignatureProfile negate(const SignatureProfile& p);

/// r -> companion(w r mod 1) + orbit(r).
SignatureProfile satellite_pullback(const SignatureProfile& companion, unsigned long w,
                                    const SignatureProfile& orbit);

/// Tristram-Levine signature profile of a Seifert form. Breakpoints are the
/// angles of the unit-circle roots of the Alexander polynomial: exact
/// rationals for cyclotomic factors, certified algebraic angles otherwise.
SignatureProfile profile_from_seifert(const SeifertForm& f);

/// Signature of A + A^T (averaged through the profile if singular).
long sigma_half(const SeifertForm& f);

/// Phi_d divides the Alexander polynomial, for r = s/d in lowest terms.
bool is_singular_at(const SeifertForm& f, const Rational& r);

/// Signature of (1 - z)A + (1 - conj z)A^T, z = exp(2 pi i r), at a rational
/// r in (0, 1/2] where it is nonsingular, through u = tan(pi r): callers pass
/// u itself. Exposed for cross-checks.
long tangent_signature(const SeifertForm& f, const Rational& u);

}  // namespace concord
