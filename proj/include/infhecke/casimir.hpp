#pragma once

#include <utility>

#include "infhecke/algebra.hpp"
#include "infhecke/delta_poly.hpp"

namespace infhecke {

/// (f_n, g_n) from the coupled recursion
///   f_{n+1} = 2 Delta^n + (Delta - 1) f_n - 2 g_n,
///   g_{n+1} = -3 Delta^n + (Delta + 3) g_n - 2 Delta f_n,
/// with f_0 = g_0 = 0. f_n has degree n-1 and leading coefficient 2n.
std::pair<DeltaPoly, DeltaPoly> fnGn(unsigned n);

/// Linear extension of Delta^n -> f_n (resp. g_n); kernel = constants.
DeltaPoly applyF(const DeltaPoly& q);
DeltaPoly applyG(const DeltaPoly& q);

/// The unique constant-free p with applyF(p) = q.
DeltaPoly applyFInverse(const DeltaPoly& q);

/// [q(Delta), x] = (F(q) h + G(q)) x + 2 F(q) e y in normal form.
/// Independent of z, and equal to the rewriting-engine commutator.
NcPoly commutatorWithX(const DeltaPoly& q);
/// [q(Delta), y] = 2 F(q) f x + (-F(q) h + G(q)) y.
NcPoly commutatorWithY(const DeltaPoly& q);

}  // namespace infhecke
