#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "concord/matrix.hpp"
#include "concord/polynomial.hpp"

namespace concord {

/// Integer 2g x 2g matrix A with det(A - A^T) = 1.
class SeifertForm {
 public:
  /// Validates; throws NotSquare, OddSize or NonUnimodularSkewPart.
  explicit SeifertForm(IntMatrix a);

  const IntMatrix& matrix() const noexcept { return a_; }
  std::size_t size() const noexcept { return a_.rows(); }
  std::size_t genus() const noexcept { return a_.rows() / 2; }

  /// A - A^T
  IntMatrix skew() const;
  /// A + A^T
  IntMatrix symmetrized() const;

 private:
  IntMatrix a_;
};

SeifertForm validate_seifert(const IntMatrix& m);

/// G = (A - A^T)^-1 A.
IntMatrix isometric_structure(const SeifertForm& f);

/// det(A - t A^T).
IntPolynomial alexander(const SeifertForm& f);

/// det(x I - m) for a square integer matrix.
IntPolynomial characteristic_polynomial(const IntMatrix& m);

/// det(xI - G) == +-x^{2g} Delta(1 - 1/x), with G the isometric structure of f
/// or an explicitly supplied matrix.
bool charpoly_identity_check(const SeifertForm& f);
bool charpoly_identity_check(const SeifertForm& f, const IntMatrix& g);

SeifertForm block_sum(const SeifertForm& a, const SeifertForm& b);
/// -A^T
SeifertForm mirror(const SeifertForm& f);

/// Sublattice given by basis rows.
struct Metabolizer {
  IntMatrix basis;
  /// Set for rank-one eigen-metabolizers of genus-one forms.
  std::optional<Integer> eigenvalue;
};

/// Direct summand of rank g, invariant under G, isotropic for A - A^T.
bool is_metabolizer(const SeifertForm& f, const IntMatrix& basis);

/// Primitive integral eigenvectors of G for a genus-one form, sorted by
/// eigenvalue. Each vector has its last nonzero coordinate positive.
std::vector<Metabolizer> find_rank1_metabolizers(const SeifertForm& f);

inline constexpr std::size_t kDefaultEnumerationBudget = 50'000'000;

/// All metabolizers whose Hermite basis has entries bounded by height in
/// absolute value. Genus at most 2. Throws HeightTooLargeForBudget when the
/// candidate count exceeds budget.
std::vector<Metabolizer> enumerate_metabolizers(const SeifertForm& f, long height,
                                                std::size_t budget = kDefaultEnumerationBudget);

/// Same lattice spanned (compared through Hermite normal forms).
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

/// gcd over Q[t, 1/t] is a unit.
bool alexander_coprime(const IntPolynomial& p1, const IntPolynomial& p2);

struct BezoutRelation {
  IntPolynomial u1;
  IntPolynomial u2;
  Integer c;
};

/// u1 phi1 + u2 phi2 = c with c > 0 the least positive integer reachable by
/// scaling the rational Bezout pair. Throws NotCoprime.
BezoutRelation integer_bezout(const IntPolynomial& phi1, const IntPolynomial& phi2);

/// Z1 = Z meet H1, Z2 = Z meet H2 for a metabolizer Z of block_sum(f1, f2).
std::pair<Metabolizer, Metabolizer> split_metabolizer(const SeifertForm& f1, const SeifertForm& f2,
                                                      const Metabolizer& z);

}  // namespace concord
