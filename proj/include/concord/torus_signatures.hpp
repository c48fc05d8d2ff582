#pragma once

#include "concord/signature_profiles.hpp"

namespace concord {

/// Half the jump of sigma_r(T_{m,n}) at r, for coprime m, n > 0. Defined on
/// [0, 1/2] by Litherland's formula and extended to (1/2, 1] by
/// f(r) = -f(1 - r).
int jump_f(long m, long n, const Rational& r);

/// All jumps 2 f_{m,n}(s/(mn)) of the positive torus knot T_{m,n}.
JumpList torus_jumps(long m, long n);

/// sigma_r(T_{2,2k+1}), k >= 0. Closed form off the jump set, averaged value
/// on it.
Rational sigma_T2(long k, const Rational& r);

/// sigma_r(T_{l,-l-1}), l >= 1, summed from the jumps of T_{l,l+1} with the
/// sign reversed.
Rational sigma_Tll1(long l, const Rational& r);

SignatureProfile profile_T2(long k);
SignatureProfile profile_Tll1(long l);

/// Band matrix of the 2-strand fiber surface of T_{2,n}, n odd >= 3:
/// -1 on the diagonal, 1 on the superdiagonal.
SeifertForm seifert_T2n(long n);

}  // namespace concord
