#include "concord/casson_gordon.hpp"

namespace concord {

Genus1Data Genus1Data::from_matrix(const IntMatrix& matrix, SignatureProfile knot_profile,
                                   SignatureProfile jx_profile) {
  if (matrix.rows() != 2 || matrix.cols() != 2 || matrix(1, 0) != matrix(0, 1) - 1)
    throw Error(Errc::NotNaikShape, "expected a matrix [[a, -m], [-(m+1), b]]");
  return Genus1Data{matrix(0, 0), Integer(-matrix(0, 1)), matrix(1, 1), std::move(knot_profile),
                    std::move(jx_profile)};
}

IntMatrix Genus1Data::matrix() const {
  IntMatrix out(2, 2);
  out(0, 0) = a;
  out(0, 1) = -m;
  out(1, 0) = -(m + 1);
  out(1, 1) = b;
  return out;
}

std::vector<Integer> s_sequence(const Integer& m, const Integer& d, const Integer& s,
                                unsigned long q) {
  if (d < 2) throw Error(Errc::InvalidArgument, "d must be at least 2");
  const auto inv = inverse_mod(m, d);
  if (!inv) throw Error(Errc::MNotInvertible, "m = " + m.get_str() + " is not invertible mod " + d.get_str());
  if (gcd(s, d) != 1) throw Error(Errc::SNotCoprime, "s = " + s.get_str() + " shares a factor with d");
  const Integer step = mod(Integer(1 + *inv), d);
  std::vector<Integer> out;
  Integer cur = mod(s, d);
  for (unsigned long i = 0; i < q; ++i) {
    if (cur == 0) throw Error(Errc::StepHitsZero, "s_" + std::to_string(i) + " is 0 mod d");
    out.push_back(cur);
    cur = mod(Integer(cur * step), d);
  }
  return out;
}

CGValue sigma1_tau(const Genus1Data& data, unsigned long q, const Integer& d, const Integer& s) {
  if (!as_prime_power(Integer(q)))
    throw Error(Errc::NotPrimePower, "q = " + std::to_string(q) + " is not a prime power");
  if (!as_prime_power(d)) throw Error(Errc::NotPrimePower, "d = " + d.get_str() + " is not a prime power");
  if (mpz_divisible_p(data.a.get_mpz_t(), d.get_mpz_t()) == 0)
    throw Error(Errc::HypothesisFailed, "d = " + d.get_str() + " does not divide a = " + data.a.get_str());
  const std::vector<Integer> seq = s_sequence(data.m, d, s, q);
  const CharacterQ chi{frac(make_rational(s, d)), Rational(0)};
  if (!in_Nq(data.form(), q, chi))
    throw Error(Errc::HypothesisFailed, "x (x) s/d is not in N^q");

  CGValue out;
  out.value = 0;
  const Rational dd(d * d);
  for (unsigned long i = 0; i < q; ++i) {
    CGTerm t;
    t.i = static_cast<long>(i);
    t.s_i = seq[i];
    t.jx = data.jx_profile.eval(make_rational(seq[i], d));
    t.quadratic = Rational(2 * (d - seq[i]) * seq[i] * data.a) / dd;
    t.knot = -data.knot_profile.eval(make_rational(Integer(i), Integer(q)));
    out.value += t.jx + t.quadratic + t.knot;
    out.terms.push_back(std::move(t));
  }
  return out;
}

Rational sigma1_tau_sum(const std::vector<CGPiece>& pieces) {
  Rational total = 0;
  for (const auto& piece : pieces) {
    if (piece.q != pieces.front().q) throw Error(Errc::MixedQ, "pieces use different q");
    if (piece.character) {
      total += sigma1_tau(piece.data, piece.q, piece.character->first, piece.character->second).value;
      continue;
    }
    if (find_rank1_metabolizers(piece.data.form()).empty())
      throw Error(Errc::HypothesisFailed,
                  "trivial character on a piece that is not algebraically slice");
  }
  return total;
}

}  // namespace concord
