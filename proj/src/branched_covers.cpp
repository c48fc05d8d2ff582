#include "concord/branched_covers.hpp"

namespace concord {

CharacterQ reduce_mod1(const CharacterQ& chi) {
  CharacterQ out;
  out.reserve(chi.size());
  for (const auto& c : chi) out.push_back(frac(c));
  return out;
}

IntMatrix presentation_matrix(const SeifertForm& f, unsigned long q) {
  if (q < 2) throw Error(Errc::InvalidArgument, "cover degree q must be at least 2");
  const IntMatrix g = isometric_structure(f);
  return power(g, q) - power(IntMatrix(g - IntMatrix::identity(f.size())), q);
}

std::optional<Integer> homology_order(const SeifertForm& f, unsigned long q) {
  const Integer d = abs(determinant(presentation_matrix(f, q)));
  if (d == 0) return std::nullopt;
  return d;
}

CoverHomology cover_homology(const SeifertForm& f, unsigned long q) {
  CoverHomology out;
  out.q = q;
  out.presentation = presentation_matrix(f, q);
  out.smith = smith_normal_form(out.presentation);
  out.invariant_factors = out.smith.invariant_factors();
  Integer order = 1;
  for (const auto& d : out.invariant_factors) order *= d;
  if (order != 0) out.order = order;
  return out;
}

Integer lucas_order(long k, unsigned long q) {
  if (k < 1) throw Error(Errc::InvalidArgument, "lucas_order needs k >= 1");
  if (q % 2 == 0) throw Error(Errc::InvalidArgument, "lucas_order needs odd q");
  Integer prev = 2, cur = 1;
  for (unsigned long j = 1; j < q; ++j) {
    Integer next = cur + k * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur * cur;
}

Integer CharacterGroup::order() const {
  Integer out = 1;
  for (const auto& d : orders) out *= d;
  return out;
}

CharacterGroup kernel_Nq(const SeifertForm& f, unsigned long q) {
  const CoverHomology h = cover_homology(f, q);
  if (!h.order) throw Error(Errc::InfiniteHomology, "H_1 of the cover is infinite");
  CharacterGroup out;
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& d = h.invariant_factors[i];
    if (d == 1) continue;
    CharacterQ chi(n);
    for (std::size_t j = 0; j < n; ++j) chi[j] = make_rational(h.smith.right(j, i), d);
    out.orders.push_back(d);
    out.generators.push_back(reduce_mod1(chi));
  }
  return out;
}

CharacterGroup p_primary(const CharacterGroup& group, const Integer& p) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, "p_primary needs a prime");
  CharacterGroup out;
  for (std::size_t i = 0; i < group.orders.size(); ++i) {
    Integer rest = group.orders[i];
    Integer ppart = 1;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
      rest /= p;
      ppart *= p;
    }
    if (ppart == 1) continue;
    CharacterQ chi = group.generators[i];
    for (auto& c : chi) c *= rest;
    out.orders.push_back(ppart);
    out.generators.push_back(reduce_mod1(chi));
  }
  return out;
}

bool in_Nq(const SeifertForm& f, unsigned long q, const CharacterQ& chi) {
  if (chi.size() != f.size()) throw Error(Errc::InvalidArgument, "character has the wrong length");
  const RatVector image = to_rational(presentation_matrix(f, q)) * chi;
  for (const auto& v : image)
    if (v.get_den() != 1) return false;
  return true;
}

Integer character_order(const CharacterQ& chi) {
  Integer out = 1;
  for (const auto& c : chi) out = lcm(out, Integer(c.get_den()));
  return out;
}

}  // namespace concord
