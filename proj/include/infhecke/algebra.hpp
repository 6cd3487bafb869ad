#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "infhecke/delta_poly.hpp"
#include "infhecke/ncpoly.hpp"

namespace infhecke {

/// Substitute Delta = h^2 + 4ef - 2h and normal-order. Independent of z:
/// the rewriting of U(g)-only words never touches the x*y rule.
NcPoly expandDelta(const DeltaPoly& q);

/// The algebra H_z, fixed by its deformation parameter z (a polynomial in
/// Delta). All products of NcPoly values live in one Algebra instance.
///
/// Values are immutable and all operations are pure; the only internal
/// mutable state is a memo cache of generator products, synchronized with a
/// mutex, so an Algebra may be shared between threads.
///
/// Rewriting works by moving a single generator left-to-right into its PBW
/// slot. Termination: each step either keeps the x,y-letter count and
/// strictly reduces the number of x,y inversions, or (the x*y -> y*x + z
/// rule) strictly reduces the x,y-letter count; U(g)-internal swaps are
/// closed forms that terminate outright.
class Algebra {
  public:
    explicit Algebra(DeltaPoly z);

    const DeltaPoly& z() const { return z_; }
    /// Normal form of z after the Delta substitution.
    const NcPoly& zExpanded() const { return zExpanded_; }

    /// PBW normal form of p*q. Bilinear, associative, with 1 as identity.
    NcPoly multiply(const NcPoly& p, const NcPoly& q) const;
    NcPoly pow(const NcPoly& p, unsigned n) const;
    /// pq - qp in normal form.
    NcPoly commutator(const NcPoly& p, const NcPoly& q) const;

    /// The anti-automorphism j: x<->y, h->h, e->-f, f->-e; j(pq)=j(q)j(p).
    NcPoly antiJ(const NcPoly& p) const;

  private:
    NcPoly leftMulGen(Gen g, const Monomial& m) const;
    NcPoly leftMulGenUncached(Gen g, const Monomial& m) const;
    NcPoly leftMulPoly(Gen g, const NcPoly& p) const;
    NcPoly monoTimesPoly(const Monomial& m, const NcPoly& p) const;
    /// Normal form of x * y^d (the only place the parameter z enters).
    NcPoly xTimesYPow(std::uint32_t d) const;

    DeltaPoly z_;
    NcPoly zExpanded_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::uint64_t, NcPoly> leftMulCache_;
    mutable std::vector<NcPoly> xyPowCache_;
};

}  // namespace infhecke
