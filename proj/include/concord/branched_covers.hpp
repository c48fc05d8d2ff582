#pragma once

#include <optional>
#include <vector>

#include "concord/core_forms.hpp"

namespace concord {

/// Element of H_1(F; Q/Z) in the Seifert basis, coordinates in [0,1).
using CharacterQ = std::vector<Rational>;

CharacterQ reduce_mod1(const CharacterQ& chi);

/// G^q - (G - I)^q, a presentation matrix for H_1 of the q-fold branched cover.
IntMatrix presentation_matrix(const SeifertForm& f, unsigned long q);

/// |det| of the presentation matrix; nullopt when the homology is infinite.
std::optional<Integer> homology_order(const SeifertForm& f, unsigned long q);

struct CoverHomology {
  unsigned long q = 0;
  IntMatrix presentation;
  SmithForm smith;
  std::vector<Integer> invariant_factors;
  std::optional<Integer> order;
};

CoverHomology cover_homology(const SeifertForm& f, unsigned long q);

/// (L_q)^2 with L_0 = 2, L_1 = 1, L_j = L_{j-1} + k L_{j-2}; k >= 1, q odd.
Integer lucas_order(long k, unsigned long q);

/// Finite abelian group presented as a sum of cyclic groups of the given
/// orders, each with one generating character.
struct CharacterGroup {
  std::vector<Integer> orders;
  std::vector<CharacterQ> generators;

  Integer order() const;
};

/// N^q = {chi : (G^q - (G-I)^q) chi integral} / Z^{2g}. Throws InfiniteHomology.
CharacterGroup kernel_Nq(const SeifertForm& f, unsigned long q);

/// p-primary part of a character group, p prime.
CharacterGroup p_primary(const CharacterGroup& group, const Integer& p);

bool in_Nq(const SeifertForm& f, unsigned long q, const CharacterQ& chi);

/// Order of chi in Q/Z-coordinates (lcm of the denominators).
Integer character_order(const CharacterQ& chi);

}  // namespace concord
