#pragma once

#include <array>
#include <string>
#include <vector>

#include "infhecke/algebra.hpp"

namespace infhecke {

/// A would-be derivation of H_z, given by its images on the generators; it
/// is an actual derivation iff checkDerivation finds no violated relation.
struct DerivationSpec {
    std::array<NcPoly, 5> images;

    NcPoly& image(Gen g) { return images[static_cast<std::size_t>(g)]; }
    const NcPoly& image(Gen g) const { return images[static_cast<std::size_t>(g)]; }
};

/// One defining relation [u, v] = rhs of H_z.
struct Relation {
    Gen u = Gen::F;
    Gen v = Gen::F;
    NcPoly rhs;
    std::string name;
};

/// The ten commutation relations; [x,y] = z picks up the algebra parameter.
std::vector<Relation> definingRelations(const Algebra& algebra);

struct RelationViolation {
    std::string relation;
    NcPoly defect;  // [D(u), v] + [u, D(v)] - D(rhs)
};

/// Leibniz extension of the generator images through the PBW normal form.
NcPoly applyDerivation(const DerivationSpec& d, const NcPoly& p, const Algebra& algebra);

/// Empty list iff d defines a derivation of H_z.
std::vector<RelationViolation> checkDerivation(const DerivationSpec& d, const Algebra& algebra);

/// g -> [p, g].
DerivationSpec innerDerivation(const NcPoly& p, const Algebra& algebra);

/// x -> t^i x, y -> t^i y, zero on U(g). Only defined on H_0: for z != 0 the
/// Leibniz check on [x,y] = z fails with defect 2 t^i z, and the request is
/// rejected with that obstruction in the message.
DerivationSpec eulerFamily(unsigned i, const Algebra& algebra);

struct OuterSearchReport {
    unsigned maxPower = 0;
    unsigned maxAlphaDegree = 0;
    /// Dimension of the space of coefficient tuples (alpha_i) whose
    /// DerivationSpec x -> sum t_z^i alpha_i x, y -> sum t_z^i alpha_i y
    /// passes the Leibniz check. 0 for z != 0; the constants for z = 0.
    std::size_t kernelDimension = 0;
    /// Defect == 2 sum t^i alpha_i z - sum t^i (2 F(alpha_i)(t_z + omega_z)
    /// + G(alpha_i) z) held for every basis tuple.
    bool obstructionIdentityHolds = false;
    std::size_t candidatesChecked = 0;
};

/// Exact bounded search over derivations of the shape x -> sum t_z^i alpha_i x. The
/// Leibniz defect is linear in the alpha coefficients, so a kernel
/// computation covers every rational tuple with i <= maxPower and
/// deg alpha_i <= maxAlphaDegree.
OuterSearchReport outerDerivationSearch(const Algebra& algebra, unsigned maxPower = 1,
                                        unsigned maxAlphaDegree = 2);

}  // namespace infhecke
