#pragma once

#include <utility>
#include <vector>

#include "infhecke/algebra.hpp"
#include "infhecke/casimir.hpp"

namespace infhecke {

/// The central generator t_z = t - 1/2 h z - omega_z together with the pieces
/// it was assembled from.
struct CentralElementResult {
    NcPoly tz;
    DeltaPoly omega;
    DeltaPoly z;
};

/// Normal form of t = e y^2 + h x y - f x^2 in the given algebra (the x*y
/// swap makes this depend on z).
NcPoly tElement(const Algebra& algebra);

/// omega_z = -F^{-1}(z) + 1/2 z + 1/2 F^{-1}(G(z)), the Delta-polynomial with
/// [x, omega_z] = q_z. Canonicalized by the zero-constant convention of
/// applyFInverse.
DeltaPoly omegaZ(const DeltaPoly& z);

CentralElementResult centralElement(const Algebra& algebra);

/// The nonzero commutators [p, g] over g in {e,f,h,x,y}; empty iff central.
std::vector<std::pair<Gen, NcPoly>> verifyCentral(const NcPoly& p, const Algebra& algebra);

/// q_z = [x, t - 1/2 h z].
NcPoly qZ(const Algebra& algebra);

struct CenterTerm {
    unsigned power;   // exponent of t_z
    DeltaPoly gamma;  // coefficient in C[Delta]
};

/// Write an element commuting with e, f, h as sum_i gamma_i(Delta) t_z^i by
/// stripping the x-free block of top y-power (which is gamma e^n y^(2n)).
/// Terms come back in the order found, i.e. by descending power.
std::vector<CenterTerm> expressInCenter(const NcPoly& p, const Algebra& algebra);

}  // namespace infhecke
