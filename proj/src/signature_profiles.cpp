#include "concord/signature_profiles.hpp"

#include <algorithm>
#include <numeric>

namespace concord {

namespace {

Rational average(long a, long b) { return make_rational(a + b, 2); }

std::vector<long> check_plateaus(const std::vector<Breakpoint>& bps, const std::vector<long>& pl) {
  if (pl.size() != bps.size() + 1)
    throw Error(Errc::InvalidProfile, "need exactly one more plateau than breakpoints");
  if (pl.front() != 0) throw Error(Errc::InvalidProfile, "first plateau must be 0");
  for (long v : pl)
    if (v % 2 != 0) throw Error(Errc::InvalidProfile, "plateau values must be even");
  const std::size_t n = bps.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (compare(bps[i], Rational(0)) <= 0 || compare(bps[i], Rational(1)) >= 0)
      throw Error(Errc::InvalidProfile, "breakpoints must lie in (0,1)");
    if (i > 0 && compare(bps[i - 1], bps[i]) >= 0)
      throw Error(Errc::InvalidProfile, "breakpoints must increase strictly");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (compare(bps[i], bps[n - 1 - i].mirror()) != 0)
      throw Error(Errc::InvalidProfile, "breakpoints are not symmetric under r -> 1 - r");
  for (std::size_t i = 0; i <= n; ++i)
    if (pl[i] != pl[n - i]) throw Error(Errc::InvalidProfile, "plateaus are not symmetric");
  return pl;
}

}  // namespace

SignatureProfile::SignatureProfile(std::vector<Breakpoint> breakpoints, std::vector<long> plateaus)
    : breakpoints_(std::move(breakpoints)), plateaus_(check_plateaus(breakpoints_, plateaus)) {}

Rational SignatureProfile::eval(const Rational& r) const {
  if (r < 0 || r > 1) throw Error(Errc::OutOfRange, "r = " + to_string(r) + " is outside [0,1]");
  if (r == 0 || r == 1) return 0;
  std::size_t lo = 0, hi = breakpoints_.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (compare(breakpoints_[mid], r) < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < breakpoints_.size() && compare(breakpoints_[lo], r) == 0)
    return average(plateaus_[lo], plateaus_[lo + 1]);
  return plateaus_[lo];
}

Rational SignatureProfile::eval(const Breakpoint& b) const {
  if (b.is_rational()) return eval(b.rational());
  std::size_t i = 0;
  while (i < breakpoints_.size()) {
    const int c = compare(breakpoints_[i], b);
    if (c == 0) return average(plateaus_[i], plateaus_[i + 1]);
    if (c > 0) break;
    ++i;
  }
  return plateaus_[i];
}

long SignatureProfile::min_plateau() const {
  return *std::min_element(plateaus_.begin(), plateaus_.end());
}

SignatureProfile SignatureProfile::normalized() const {
  std::vector<Breakpoint> bps;
  std::vector<long> pl{plateaus_.front()};
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (plateaus_[i + 1] == pl.back()) continue;
    bps.push_back(breakpoints_[i]);
    pl.push_back(plateaus_[i + 1]);
  }
  return SignatureProfile(Unchecked{}, std::move(bps), std::move(pl));
}

bool SignatureProfile::is_zero() const {
  return std::all_of(plateaus_.begin(), plateaus_.end(), [](long v) { return v == 0; });
}

bool operator==(const SignatureProfile& a, const SignatureProfile& b) {
  const SignatureProfile x = a.normalized();
  const SignatureProfile y = b.normalized();
  if (x.plateaus_ != y.plateaus_) return false;
  for (std::size_t i = 0; i < x.breakpoints_.size(); ++i)
    if (compare(x.breakpoints_[i], y.breakpoints_[i]) != 0) return false;
  return true;
}

SignatureProfile profile_from_jumps(const JumpList& jumps) {
  std::vector<Breakpoint> bps;
  std::vector<long> pl{0};
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    const Jump& j = jumps[i];
    if (j.jump == 0 || j.jump % 2 != 0)
      throw Error(Errc::InvalidJump, "jumps must be nonzero even integers");
    if (j.location <= 0 || j.location >= 1)
      throw Error(Errc::InvalidJump, "jump location " + to_string(j.location) + " outside (0,1)");
    if (i > 0 && jumps[i - 1].location >= j.location)
      throw Error(Errc::InvalidJump, "jump locations must increase strictly");
  }
  const std::size_t n = jumps.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Jump& mate = jumps[n - 1 - i];
    if (mate.location != 1 - jumps[i].location || mate.jump != -jumps[i].jump || 2 * i + 1 == n)
      throw Error(Errc::AsymmetricJumps,
                  "jump at " + to_string(jumps[i].location) + " has no mirror image");
  }
  for (const auto& j : jumps) {
    bps.emplace_back(j.location);
    pl.push_back(pl.back() + j.jump);
  }
  return SignatureProfile(std::move(bps), std::move(pl));
}

SignatureProfile add(const SignatureProfile& a, const SignatureProfile& b) {
  const auto& ba = a.breakpoints_;
  const auto& bb = b.breakpoints_;
  std::vector<Breakpoint> bps;
  std::vector<long> pl{a.plateaus_[0] + b.plateaus_[0]};
  std::size_t i = 0, j = 0;
  while (i < ba.size() || j < bb.size()) {
    int c;
    if (i == ba.size()) {
      c = 1;
    } else if (j == bb.size()) {
      c = -1;
    } else {
      c = compare(ba[i], bb[j]);
    }
    if (c <= 0) {
      bps.push_back(ba[i++]);
      if (c == 0) ++j;
    } else {
      bps.push_back(bb[j++]);
    }
    pl.push_back(a.plateaus_[i] + b.plateaus_[j]);
  }
  return SignatureProfile(SignatureProfile::Unchecked{}, std::move(bps), std::move(pl));
}

SignatureProfile negate(const SignatureProfile& p) {
  std::vector<long> pl = p.plateaus_;
  for (auto& v : pl) v = -v;
  return SignatureProfile(SignatureProfile::Unchecked{}, p.breakpoints_, std::move(pl));
}

SignatureProfile satellite_pullback(const SignatureProfile& companion, unsigned long w,
                                    const SignatureProfile& orbit) {
  if (w == 0) return orbit;
  std::vector<Breakpoint> bps;
  std::vector<long> pl{0};
  for (unsigned long j = 0; j < w; ++j)
    for (std::size_t i = 0; i < companion.breakpoints_.size(); ++i) {
      bps.push_back(companion.breakpoints_[i].pullback(w, j));
      pl.push_back(companion.plateaus_[i + 1]);
    }
  return add(SignatureProfile(SignatureProfile::Unchecked{}, std::move(bps), std::move(pl)), orbit);
}

long tangent_signature(const SeifertForm& f, const Rational& u) {
  const IntMatrix s = f.symmetrized();
  const IntMatrix w = f.skew();
  const std::size_t n = f.size();
  RatMatrix real(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      real(i, j) = u * s(i, j);
      real(n + i, n + j) = u * s(i, j);
      real(i, n + j) = w(i, j);
      real(n + i, j) = -w(i, j);
    }
  const Inertia in = inertia(real);
  if (in.zero != 0) throw Error(Errc::InvalidArgument, "signature requested at a singular point");
  return in.signature() / 2;
}

namespace {

unsigned long totient(unsigned long n) {
  unsigned long out = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    out -= out / p;
  }
  if (n > 1) out -= out / n;
  return out;
}

// (2 - x) / (2 + x) = tan^2(pi r) for x = 2cos(2 pi r).
Rational tan_squared(const Rational& x) { return (2 - x) / (2 + x); }

// Positive rational u with lo < u^2 < hi.
Rational rational_sqrt_between(const Rational& lo, const Rational& hi) {
  for (unsigned k = 0;; ++k) {
    Integer scale = 1;
    scale <<= 2 * k;
    Integer n = integer_sqrt(floor(hi * scale));
    Rational u(n, Integer(1) << k);
    u.canonicalize();
    if (u * u >= hi) {
      u -= Rational(1, Integer(1) << k);
    }
    if (u > 0 && u * u > lo) return u;
  }
}

}  // namespace

SignatureProfile profile_from_seifert(const SeifertForm& f) {
  const IntPolynomial delta = strip_x_power(alexander(f));
  const IntPolynomial q = palindromic_to_x(delta);

  std::vector<Breakpoint> lower;
  std::vector<RootInterval> roots;
  if (q.degree() >= 1) {
    const IntPolynomial qs = squarefree_part(q);
    roots = isolate_real_roots(qs, -2, 2);
    IntPolynomial rest = qs;
    const unsigned long deg = static_cast<unsigned long>(qs.degree());
    const unsigned long bound = 8 * deg * deg + 2;
    for (unsigned long d = 3; d <= bound && rest.degree() >= 1; ++d) {
      if (totient(d) / 2 > static_cast<unsigned long>(rest.degree())) continue;
      const IntPolynomial psi = real_cyclotomic(d);
      if (!divides(psi, rest)) continue;
      rest = exact_quotient(rest, psi);
      for (unsigned long s = 1; 2 * s < d; ++s)
        if (std::gcd(s, d) == 1) lower.emplace_back(make_rational(static_cast<long>(s), static_cast<long>(d)));
    }
    if (rest.degree() >= 1) {
      rest = primitive_part(rest);
      for (const auto& iv : isolate_real_roots(rest, -2, 2))
        lower.push_back(Breakpoint::algebraic(rest, iv, false));
    }
    std::sort(lower.begin(), lower.end(),
              [](const Breakpoint& a, const Breakpoint& b) { return compare(a, b) < 0; });
    if (lower.size() != roots.size())
      throw Error(Errc::RootIsolationFailure, "breakpoint count does not match root count");
    // Separate the isolating intervals from each other and from x = +-2 so
    // every gap has interior.
    if (!roots.empty()) {
      while (roots.back().hi >= 2) roots.back() = refine_root(qs, roots.back());
      while (roots.front().lo <= -2) roots.front() = refine_root(qs, roots.front());
    }
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
      while (!(roots[i].hi < roots[i + 1].lo)) {
        roots[i] = refine_root(qs, roots[i]);
        roots[i + 1] = refine_root(qs, roots[i + 1]);
      }
  }

  const std::size_t n = roots.size();
  std::vector<long> pl(n + 1);
  // Gap k (in order of increasing r) lies between x-roots n-k and n-1-k.
  for (std::size_t k = 0; k < n; ++k) {
    const Rational x_hi = k == 0 ? Rational(2) : roots[n - k].lo;
    const Rational x_lo = roots[n - 1 - k].hi;
    const Rational u2_lo = k == 0 ? Rational(0) : tan_squared(x_hi);
    pl[k] = tangent_signature(f, rational_sqrt_between(u2_lo, tan_squared(x_lo)));
  }
  const Inertia half = inertia(to_rational(f.symmetrized()));
  if (half.zero != 0) throw Error(Errc::InvalidArgument, "A + A^T is singular");
  pl[n] = half.signature();
  if (pl[0] != 0) throw Error(Errc::InvalidProfile, "signature near r = 0 is nonzero");

  std::vector<Breakpoint> bps = lower;
  std::vector<long> plateaus = pl;
  for (std::size_t i = n; i-- > 0;) {
    bps.push_back(lower[i].mirror());
    plateaus.push_back(pl[i]);
  }
  return SignatureProfile(SignatureProfile::Unchecked{}, std::move(bps), std::move(plateaus));
}

long sigma_half(const SeifertForm& f) {
  const Inertia in = inertia(to_rational(f.symmetrized()));
  if (in.zero == 0) return in.signature();
  return profile_from_seifert(f).eval(Rational(1, 2)).get_num().get_si();
}

bool is_singular_at(const SeifertForm& f, const Rational& r) {
  if (r <= 0 || r >= 1) throw Error(Errc::OutOfRange, "r must lie in (0,1)");
  const Integer& d = r.get_den();
  if (!d.fits_ulong_p()) throw Error(Errc::InvalidArgument, "denominator too large");
  return divides(cyclotomic(d.get_ui()), alexander(f));
}

}  // namespace concord
