#pragma once

#include <optional>
#include <vector>

#include "concord/branched_covers.hpp"
#include "concord/signature_profiles.hpp"

namespace concord {

/// Genus-one knot with Seifert matrix [[a, -m], [-(m+1), b]], the signature
/// profile of the knot itself and that of the knot J_x tied in the band x.
struct Genus1Data {
  Integer a;
  Integer m;
  Integer b;
  SignatureProfile knot_profile;
  SignatureProfile jx_profile;

  /// Throws NotNaikShape unless matrix(1,0) == matrix(0,1) - 1.
  static Genus1Data from_matrix(const IntMatrix& matrix, SignatureProfile knot_profile,
                                SignatureProfile jx_profile);

  IntMatrix matrix() const;
  SeifertForm form() const { return SeifertForm(matrix()); }
};

struct CGTerm {
  long i = 0;
  Integer s_i;
  Rational jx;         // sigma_{s_i/d}(J_x)
  Rational quadratic;  // 2 (d - s_i) s_i a / d^2
  Rational knot;       // -sigma_{i/q}(K)
};

struct CGValue {
  Rational value;
  std::vector<CGTerm> terms;
};

/// s_i = (1 + m*)^i s mod d for i < q, with m* the inverse of m mod d.
/// Throws MNotInvertible, SNotCoprime, StepHitsZero.
std::vector<Integer> s_sequence(const Integer& m, const Integer& d, const Integer& s,
                                unsigned long q);

/// sigma_1 tau(K, chi) for the character x (x) s/d, q and d prime powers.
/// Throws NotPrimePower, SNotCoprime, HypothesisFailed (d does not divide a,
/// or the character is not in N^q).
CGValue sigma1_tau(const Genus1Data& data, unsigned long q, const Integer& d, const Integer& s);

struct CGPiece {
  Genus1Data data;
  unsigned long q = 0;
  /// (d, s); empty for the trivial character.
  std::optional<std::pair<Integer, Integer>> character;
};

/// Sum over a connected sum. Trivial characters contribute 0 on
/// algebraically slice pieces. Throws MixedQ, HypothesisFailed.
Rational sigma1_tau_sum(const std::vector<CGPiece>& pieces);

}  // namespace concord
