#include "infhecke/center.hpp"

#include "infhecke/errors.hpp"
#include "infhecke/structure.hpp"

namespace infhecke {

NcPoly tElement(const Algebra& algebra) {
    NcPoly ey2 = NcPoly::monomial(Monomial{0, 0, 1, 2, 0});
    NcPoly hx = NcPoly::monomial(Monomial{0, 1, 0, 0, 1});
    NcPoly hxy = algebra.multiply(hx, NcPoly::gen(Gen::Y));
    NcPoly fx2 = NcPoly::monomial(Monomial{1, 0, 0, 0, 2});
    return ey2 + hxy - fx2;
}

DeltaPoly omegaZ(const DeltaPoly& z) {
    return -applyFInverse(z) + Rational(1, 2) * z +
           Rational(1, 2) * applyFInverse(applyG(z));
}

CentralElementResult centralElement(const Algebra& algebra) {
    CentralElementResult r;
    r.z = algebra.z();
    r.omega = omegaZ(r.z);
    NcPoly hz = algebra.multiply(NcPoly::gen(Gen::H), algebra.zExpanded());
    r.tz = tElement(algebra) - Rational(1, 2) * hz - expandDelta(r.omega);
    return r;
}

std::vector<std::pair<Gen, NcPoly>> verifyCentral(const NcPoly& p, const Algebra& algebra) {
    std::vector<std::pair<Gen, NcPoly>> out;
    for (Gen g : kGens) {
        NcPoly c = algebra.commutator(p, NcPoly::gen(g));
        if (!c.isZero()) out.emplace_back(g, std::move(c));
    }
    return out;
}

NcPoly qZ(const Algebra& algebra) {
    NcPoly hz = algebra.multiply(NcPoly::gen(Gen::H), algebra.zExpanded());
    NcPoly inner = tElement(algebra) - Rational(1, 2) * hz;
    return algebra.commutator(NcPoly::gen(Gen::X), inner);
}

std::vector<CenterTerm> expressInCenter(const NcPoly& p, const Algebra& algebra) {
    for (Gen g : {Gen::E, Gen::F, Gen::H}) {
        if (!algebra.commutator(p, NcPoly::gen(g)).isZero())
            throw ShapeError("expressInCenter: input does not commute with g (maximal/weight obstruction)");
    }

    const NcPoly tz = centralElement(algebra).tz;
    std::vector<NcPoly> tzPow{NcPoly::one()};

    std::vector<CenterTerm> out;
    NcPoly rest = p;
    while (!rest.isZero()) {
        NcPoly xFree = selectTerms(rest, [](const Monomial& m) { return m.x == 0; });
        if (xFree.isZero())
            throw DecompositionError("expressInCenter: no x-free block left in a nonzero residual");
        std::uint32_t topY = 0;
        for (const auto& [m, c] : xFree.terms()) topY = std::max(topY, m.y);
        if (topY % 2 != 0)
            throw DecompositionError("expressInCenter: top x-free y-power is odd");
        const unsigned n = topY / 2;

        // Coefficient of y^topY in the x-free block, as a U(g) element.
        NcPoly coeffUg;
        for (const auto& [m, c] : xFree.terms()) {
            if (m.y != topY) continue;
            Monomial t = m;
            t.y = 0;
            coeffUg.addTerm(t, c);
        }
        MaximalDecomposition md = decomposeMaximalUg(coeffUg);
        if (md.power != n)
            throw DecompositionError("expressInCenter: leading block is not gamma e^n");

        while (tzPow.size() <= n) tzPow.push_back(algebra.multiply(tzPow.back(), tz));
        rest -= algebra.multiply(expandDelta(md.gamma), tzPow[n]);
        out.push_back(CenterTerm{n, std::move(md.gamma)});

        // The stripped block cancels exactly, so topY strictly decreases.
        for (const auto& [m, c] : rest.terms()) {
            if (m.x == 0 && m.y >= topY)
                throw DecompositionError("expressInCenter: leading block failed to cancel");
        }
    }
    return out;
}

}  // namespace infhecke
