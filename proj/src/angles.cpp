#include "concord/angles.hpp"

#include <mpfr.h>

#include <algorithm>

namespace concord {

namespace {

constexpr int kRefineCap = 4000;

std::size_t bits_of(const Rational& q) {
  return std::max(mpz_sizeinbase(q.get_num_mpz_t(), 2), mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

  Rational to_rational() {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

 private:
  mpfr_t v_;
};

// acos(x/2)/(2 pi), rounded in direction rnd.
Rational angle_of(const Rational& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  const mpfr_rnd_t inv = rnd == MPFR_RNDD ? MPFR_RNDU : MPFR_RNDD;
  Mpfr t(prec), pi(prec);
  const Rational half = x / 2;
  // acos is decreasing, so its input is rounded opposite to the result.
  mpfr_set_q(t.get(), half.get_mpq_t(), inv);
  if (mpfr_cmp_si(t.get(), 1) > 0) mpfr_set_si(t.get(), 1, MPFR_RNDN);
  if (mpfr_cmp_si(t.get(), -1) < 0) mpfr_set_si(t.get(), -1, MPFR_RNDN);
  mpfr_acos(t.get(), t.get(), rnd);
  mpfr_const_pi(pi.get(), inv);
  mpfr_mul_2ui(pi.get(), pi.get(), 1, inv);
  mpfr_div(t.get(), t.get(), pi.get(), rnd);
  return t.to_rational();
}

// 2cos(2 pi r) for r in [0, 1/2], rounded in direction rnd.
Rational cos_of(const Rational& r, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  const mpfr_rnd_t inv = rnd == MPFR_RNDD ? MPFR_RNDU : MPFR_RNDD;
  Mpfr theta(prec), pi(prec);
  // cos is decreasing on [0, pi], so theta is rounded opposite to the result.
  mpfr_const_pi(pi.get(), inv);
  mpfr_set_q(theta.get(), r.get_mpq_t(), inv);
  mpfr_mul(theta.get(), theta.get(), pi.get(), inv);
  mpfr_mul_2ui(theta.get(), theta.get(), 1, inv);
  if (mpfr_sgn(theta.get()) <= 0) return 2;
  Mpfr pi_lo(prec);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  if (mpfr_cmp(theta.get(), pi_lo.get()) >= 0) return -2;
  mpfr_cos(theta.get(), theta.get(), rnd);
  mpfr_mul_2ui(theta.get(), theta.get(), 1, rnd);
  return theta.to_rational();
}

mpfr_prec_t precision_for(const RootInterval& iv) {
  return static_cast<mpfr_prec_t>(64 + 2 * std::max(bits_of(iv.lo), bits_of(iv.hi)));
}

void enclose(AlgebraicAngle& a) {
  const mpfr_prec_t prec = precision_for(a.x_interval);
  Rational lo = angle_of(a.x_interval.hi, prec, MPFR_RNDD);
  Rational hi = angle_of(a.x_interval.lo, prec, MPFR_RNDU);
  if (a.upper) {
    a.r_lo = 1 - hi;
    a.r_hi = 1 - lo;
  } else {
    a.r_lo = std::move(lo);
    a.r_hi = std::move(hi);
  }
}

bool disjoint(const RootInterval& a, const RootInterval& b) { return a.hi <= b.lo || b.hi <= a.lo; }

// Sign of x_a - x_b.
int compare_x(AlgebraicAngle a, AlgebraicAngle b) {
  if (!disjoint(a.x_interval, b.x_interval)) {
    const RatPolynomial g = gcd(to_rational(a.x_poly), to_rational(b.x_poly));
    if (g.degree() >= 1) {
      const Rational lo = std::max(a.x_interval.lo, b.x_interval.lo);
      const Rational hi = std::min(a.x_interval.hi, b.x_interval.hi);
      if (lo < hi && SturmSequence(primitive_part(g)).count(lo, hi) >= 1) return 0;
    }
  }
  for (int i = 0; i < kRefineCap; ++i) {
    if (a.x_interval.hi <= b.x_interval.lo) return -1;
    if (b.x_interval.hi <= a.x_interval.lo) return 1;
    a.x_interval = refine_root(a.x_poly, a.x_interval);
    b.x_interval = refine_root(b.x_poly, b.x_interval);
  }
  throw Error(Errc::RootIsolationFailure, "could not separate algebraic breakpoints");
}

}  // namespace

void refine(AlgebraicAngle& a) {
  a.x_interval = refine_root(a.x_poly, a.x_interval);
  enclose(a);
}

Breakpoint Breakpoint::algebraic(IntPolynomial x_poly, RootInterval x_interval, bool upper,
                                 unsigned min_bits) {
  AlgebraicAngle a{std::move(x_poly), std::move(x_interval), upper, 0, 0};
  if (a.x_interval.lo < -2 || a.x_interval.hi > 2 || !(a.x_interval.lo < a.x_interval.hi))
    throw Error(Errc::InvalidArgument, "angle interval must lie inside (-2, 2)");
  enclose(a);
  Rational width = 1;
  mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), min_bits);
  for (int i = 0; a.r_hi - a.r_lo >= width; ++i) {
    if (i == kRefineCap) throw Error(Errc::RootIsolationFailure, "enclosure did not shrink");
    refine(a);
  }
  return Breakpoint(std::move(a));
}

Rational Breakpoint::lower() const { return is_rational() ? rational() : angle().r_lo; }
Rational Breakpoint::upper() const { return is_rational() ? rational() : angle().r_hi; }

Breakpoint Breakpoint::mirror() const {
  if (is_rational()) return Breakpoint(Rational(1 - rational()));
  AlgebraicAngle a = angle();
  a.upper = !a.upper;
  a.r_lo = 1 - angle().r_hi;
  a.r_hi = 1 - angle().r_lo;
  return Breakpoint(std::move(a));
}

Breakpoint Breakpoint::pullback(unsigned long w, unsigned long j) const {
  if (w == 0 || j >= w) throw Error(Errc::InvalidArgument, "pullback needs 0 <= j < w");
  if (is_rational()) return Breakpoint(Rational((rational() + j) / w));
  if (w == 1) return *this;
  AlgebraicAngle a = angle();
  const IntPolynomial q = squarefree_part(a.x_poly.compose(chebyshev_c(w)));
  const SturmSequence sturm(q);
  const Rational half(1, 2);
  for (int i = 0; i < kRefineCap; ++i, refine(a)) {
    const Rational lo = (a.r_lo + j) / w;
    const Rational hi = (a.r_hi + j) / w;
    if (lo <= half && hi >= half) continue;
    const bool up = lo > half;
    const Rational rho_lo = up ? Rational(1 - hi) : lo;
    const Rational rho_hi = up ? Rational(1 - lo) : hi;
    const mpfr_prec_t prec = precision_for(a.x_interval) + 16;
    RootInterval iv{cos_of(rho_hi, prec, MPFR_RNDD), cos_of(rho_lo, prec, MPFR_RNDU)};
    if (iv.lo <= -2 || iv.hi >= 2 || !(iv.lo < iv.hi)) continue;
    if (q.eval(iv.lo) == 0 || q.eval(iv.hi) == 0) continue;
    if (sturm.count(iv.lo, iv.hi) != 1) continue;
    return algebraic(q, iv, up);
  }
  throw Error(Errc::RootIsolationFailure, "could not isolate pulled-back breakpoint");
}

int compare(const Breakpoint& a, const Rational& r) {
  if (a.is_rational()) return sgn(a.rational() - r);
  AlgebraicAngle x = a.angle();
  for (int i = 0; i < kRefineCap; ++i, refine(x)) {
    if (r < x.r_lo) return 1;
    if (r > x.r_hi) return -1;
  }
  throw Error(Errc::RootIsolationFailure, "could not order breakpoint against a rational");
}

int compare(const Breakpoint& a, const Breakpoint& b) {
  if (a.is_rational() && b.is_rational()) return sgn(a.rational() - b.rational());
  if (b.is_rational()) return compare(a, b.rational());
  if (a.is_rational()) return -compare(b, a.rational());
  const AlgebraicAngle& x = a.angle();
  const AlgebraicAngle& y = b.angle();
  if (x.r_hi < y.r_lo) return -1;
  if (y.r_hi < x.r_lo) return 1;
  if (x.upper != y.upper) return x.upper ? 1 : -1;
  const int cx = compare_x(x, y);
  // r decreases in x on (0, 1/2) and increases on (1/2, 1).
  return x.upper ? cx : -cx;
}

}  // namespace concord
