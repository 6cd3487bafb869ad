#include "infhecke/derivations.hpp"

#include <map>

#include "infhecke/casimir.hpp"
#include "infhecke/center.hpp"
#include "infhecke/errors.hpp"
#include "infhecke/linalg.hpp"
#include "infhecke/render.hpp"

namespace infhecke {

std::vector<Relation> definingRelations(const Algebra& algebra) {
    auto g = [](Gen x) { return NcPoly::gen(x); };
    std::vector<Relation> rels{
        {Gen::H, Gen::E, Rational(2) * g(Gen::E), "[h,e]=2e"},
        {Gen::H, Gen::F, Rational(-2) * g(Gen::F), "[h,f]=-2f"},
        {Gen::E, Gen::F, g(Gen::H), "[e,f]=h"},
        {Gen::E, Gen::X, NcPoly::zero(), "[e,x]=0"},
        {Gen::E, Gen::Y, g(Gen::X), "[e,y]=x"},
        {Gen::H, Gen::X, g(Gen::X), "[h,x]=x"},
        {Gen::H, Gen::Y, -g(Gen::Y), "[h,y]=-y"},
        {Gen::F, Gen::X, g(Gen::Y), "[f,x]=y"},
        {Gen::F, Gen::Y, NcPoly::zero(), "[f,y]=0"},
        {Gen::X, Gen::Y, algebra.zExpanded(), "[x,y]=z"},
    };
    return rels;
}

NcPoly applyDerivation(const DerivationSpec& d, const NcPoly& p, const Algebra& algebra) {
    NcPoly out;
    for (const auto& [m, c] : p.terms()) {
        // Leibniz over the letters of the PBW word.
        std::vector<Gen> word;
        for (Gen g : kGens)
            word.insert(word.end(), m.exponent(g), g);
        for (std::size_t i = 0; i < word.size(); ++i) {
            Monomial prefix{}, suffix{};
            for (std::size_t k = 0; k < i; ++k) prefix.exponent(word[k]) += 1;
            for (std::size_t k = i + 1; k < word.size(); ++k) suffix.exponent(word[k]) += 1;
            NcPoly mid = d.image(word[i]);
            if (mid.isZero()) continue;
            NcPoly piece = algebra.multiply(NcPoly::monomial(prefix),
                                            algebra.multiply(mid, NcPoly::monomial(suffix)));
            out += c * piece;
        }
    }
    return out;
}

std::vector<RelationViolation> checkDerivation(const DerivationSpec& d, const Algebra& algebra) {
    std::vector<RelationViolation> out;
    for (const Relation& rel : definingRelations(algebra)) {
        NcPoly defect = algebra.commutator(d.image(rel.u), NcPoly::gen(rel.v)) +
                        algebra.commutator(NcPoly::gen(rel.u), d.image(rel.v)) -
                        applyDerivation(d, rel.rhs, algebra);
        if (!defect.isZero()) out.push_back(RelationViolation{rel.name, std::move(defect)});
    }
    return out;
}

DerivationSpec innerDerivation(const NcPoly& p, const Algebra& algebra) {
    DerivationSpec d;
    for (Gen g : kGens) d.image(g) = algebra.commutator(p, NcPoly::gen(g));
    return d;
}

DerivationSpec eulerFamily(unsigned i, const Algebra& algebra) {
    if (!algebra.z().isZero()) {
        const NcPoly defect =
            Rational(2) * algebra.multiply(algebra.pow(centralElement(algebra).tz, i),
                                           algebra.zExpanded());
        throw std::invalid_argument(
            "eulerFamily: requires z = 0; on this algebra the Leibniz defect on [x,y]=z "
            "would be " + renderPlain(defect));
    }
    const NcPoly ti = algebra.pow(tElement(algebra), i);
    DerivationSpec d;
    d.image(Gen::X) = algebra.multiply(ti, NcPoly::gen(Gen::X));
    d.image(Gen::Y) = algebra.multiply(ti, NcPoly::gen(Gen::Y));
    return d;
}

OuterSearchReport outerDerivationSearch(const Algebra& algebra, unsigned maxPower,
                                        unsigned maxAlphaDegree) {
    OuterSearchReport rep;
    rep.maxPower = maxPower;
    rep.maxAlphaDegree = maxAlphaDegree;

    const CentralElementResult ce = centralElement(algebra);
    const NcPoly omega = expandDelta(ce.omega);
    const NcPoly& zNc = algebra.zExpanded();
    std::vector<NcPoly> tzPow{NcPoly::one()};
    for (unsigned i = 1; i <= maxPower + 1; ++i)
        tzPow.push_back(algebra.multiply(tzPow.back(), ce.tz));

    // Basis tuple (i, k): alpha_i = Delta^k, the other alphas zero. The
    // Leibniz defect of the shape is linear in these tuples, and only the
    // [x,y] = z relation can fail (the images are g-equivariant).
    struct Tuple {
        unsigned i, k;
        NcPoly defect;
    };
    std::vector<Tuple> tuples;
    rep.obstructionIdentityHolds = true;
    for (unsigned i = 0; i <= maxPower; ++i) {
        for (unsigned k = 0; k <= maxAlphaDegree; ++k) {
            const DeltaPoly alpha = DeltaPoly::power(k);
            const NcPoly alphaNc = expandDelta(alpha);
            NcPoly dx = algebra.multiply(tzPow[i], algebra.multiply(alphaNc, NcPoly::gen(Gen::X)));
            NcPoly dy = algebra.multiply(tzPow[i], algebra.multiply(alphaNc, NcPoly::gen(Gen::Y)));
            NcPoly defect = algebra.commutator(dx, NcPoly::gen(Gen::Y)) +
                            algebra.commutator(NcPoly::gen(Gen::X), dy);

            // 2 t^i alpha z - t^i (2 F(alpha)(t_z + omega) + G(alpha) z)
            NcPoly closed =
                Rational(2) * algebra.multiply(tzPow[i], algebra.multiply(alphaNc, zNc)) -
                algebra.multiply(
                    tzPow[i],
                    Rational(2) * algebra.multiply(expandDelta(applyF(alpha)), ce.tz + omega) +
                        algebra.multiply(expandDelta(applyG(alpha)), zNc));
            if (!(defect == closed)) rep.obstructionIdentityHolds = false;

            tuples.push_back(Tuple{i, k, std::move(defect)});
        }
    }
    rep.candidatesChecked = tuples.size();

    // Exact kernel of the defect map over the tuple coefficients.
    std::map<Monomial, std::size_t, GradedLexLess> rowIndex;
    for (const auto& t : tuples)
        for (const auto& [m, c] : t.defect.terms()) rowIndex.emplace(m, 0);
    std::size_t next = 0;
    for (auto& [m, idx] : rowIndex) idx = next++;
    linalg::RatMatrix rows(rowIndex.size(), std::vector<Rational>(tuples.size(), Rational(0)));
    for (std::size_t j = 0; j < tuples.size(); ++j)
        for (const auto& [m, c] : tuples[j].defect.terms()) rows[rowIndex.at(m)][j] = c;
    rep.kernelDimension = linalg::kernelBasis(rows, tuples.size()).size();
    return rep;
}

}  // namespace infhecke
