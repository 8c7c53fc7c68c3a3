#pragma once

#include "weylbkk/poly.hpp"
#include "weylbkk/weyl.hpp"

namespace weylbkk {

/// A central polynomial in xi_1..xi_2n is a Poly with nvars = 2n whose
/// variables stand for xi_i = zeta_i^p.
using CenterPoly = Poly;

/// Exponent-divisibility criterion for membership in the characteristic-p
/// center F_p[zeta_1^p, ..., zeta_2n^p].
bool is_central(const WeylElement& a);

/// zeta^(p*K) -> xi^K. Requires is_central(a).
CenterPoly extract_center(const WeylElement& a);

/// xi^K -> zeta^(p*K); inverse of extract_center.
WeylElement embed_center(const CenterPoly& c);

/// {a,b} = -pi([a0,b0]/p) with canonical integer lifts a0, b0.
CenterPoly poisson_bracket(const CenterPoly& a, const CenterPoly& b);

/// {a,b} = sum_k (da/dxi_{n+k} db/dxi_k - da/dxi_k db/dxi_{n+k});
/// the partial-derivative bracket, defined over any ring. Independent
/// oracle for poisson_bracket in characteristic p.
CenterPoly classical_bracket(const CenterPoly& a, const CenterPoly& b);

} // namespace weylbkk
