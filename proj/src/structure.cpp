#include "infhecke/structure.hpp"

#include <string>

#include "infhecke/center.hpp"
#include "infhecke/errors.hpp"
#include "infhecke/linalg.hpp"
#include "infhecke/render.hpp"

namespace infhecke {

namespace {

const Algebra& ugAlgebra() {
    static const Algebra ug{DeltaPoly::zero()};
    return ug;
}

// Right-append of a module letter to a U(g)-only polynomial.
NcPoly appendGen(const NcPoly& p, Gen g, std::uint32_t k = 1) {
    NcPoly out;
    for (const auto& [m, c] : p.terms()) {
        Monomial t = m;
        t.exponent(g) += k;
        out.addTerm(t, c);
    }
    return out;
}

}  // namespace

bool isMaximal(const NcPoly& p, const Algebra& algebra) {
    return algebra.commutator(NcPoly::gen(Gen::E), p).isZero();
}

MaximalDecomposition decomposeMaximalUg(const NcPoly& u) {
    if (u.isZero()) return MaximalDecomposition{0, DeltaPoly::zero()};
    if (!isUgElement(u))
        throw ShapeError("decomposeMaximalUg: input has x or y letters");

    auto byWeight = weightDecompose(u);
    if (byWeight.size() != 1)
        throw ShapeError("decomposeMaximalUg: input is not weight-homogeneous");
    const int w = byWeight.begin()->first;
    if (w < 0 || w % 2 != 0)
        throw ShapeError("decomposeMaximalUg: weight " + std::to_string(w) +
                         " is not an even nonnegative integer");
    if (!isMaximal(u, ugAlgebra()))
        throw ShapeError("decomposeMaximalUg: input is not maximal (not killed by ad e)");

    const unsigned m = unsigned(w) / 2;
    const int kMax = (maxTotalDegree(u) - int(m)) / 2;
    if (kMax < 0) throw ShapeError("decomposeMaximalUg: degree too small for weight");

    // Columns are the candidate basis elements Delta^k e^m, rows the union
    // support coordinates; solve exactly.
    std::vector<NcPoly> candidates;
    for (int k = 0; k <= kMax; ++k)
        candidates.push_back(appendGen(expandDelta(DeltaPoly::power(unsigned(k))), Gen::E, m));

    std::map<Monomial, std::size_t, GradedLexLess> index;
    for (const auto& p : candidates)
        for (const auto& [mono, c] : p.terms()) index.emplace(mono, 0);
    for (const auto& [mono, c] : u.terms()) index.emplace(mono, 0);
    std::size_t next = 0;
    for (auto& [mono, idx] : index) idx = next++;

    linalg::RatMatrix a(index.size(), std::vector<Rational>(candidates.size(), Rational(0)));
    for (std::size_t j = 0; j < candidates.size(); ++j)
        for (const auto& [mono, c] : candidates[j].terms()) a[index.at(mono)][j] = c;
    std::vector<Rational> b(index.size(), Rational(0));
    for (const auto& [mono, c] : u.terms()) b[index.at(mono)] = c;

    auto sol = linalg::solve(a, b);
    if (!sol)
        throw DecompositionError(
            "decomposeMaximalUg: no gamma(Delta) e^m decomposition exists "
            "(unreachable for genuinely maximal input)");

    MaximalDecomposition out;
    out.power = m;
    for (std::size_t k = 0; k < sol->size(); ++k) out.gamma.setCoeff(unsigned(k), (*sol)[k]);
    return out;
}

std::pair<DeltaPoly, DeltaPoly> solveZ1Z2(const NcPoly& c) {
    // Shape gate: every term must sit in the ey-block (y=1, x=0) or the
    // x-block (y=0, x=1).
    NcPoly offenders;
    for (const auto& [m, coeff] : c.terms()) {
        const bool eyBlock = (m.y == 1 && m.x == 0);
        const bool xBlock = (m.y == 0 && m.x == 1);
        if (!eyBlock && !xBlock) offenders.addTerm(m, coeff);
    }
    if (!offenders.isZero())
        throw ShapeError("solveZ1Z2: input is not 2 psi e y + (h psi + psi1) x; offending terms: " +
                         renderPlain(offenders));

    NcPoly eyCoeff, xCoeff;
    for (const auto& [m, coeff] : c.terms()) {
        Monomial t = m;
        if (m.y == 1) {
            t.y = 0;
            eyCoeff.addTerm(t, coeff);
        } else {
            t.x = 0;
            xCoeff.addTerm(t, coeff);
        }
    }

    DeltaPoly psi;
    if (!eyCoeff.isZero()) {
        MaximalDecomposition md;
        try {
            md = decomposeMaximalUg(eyCoeff);
        } catch (const ShapeError& e) {
            throw ShapeError(std::string("solveZ1Z2: ey-block is not 2 psi e: ") + e.what());
        }
        if (md.power != 1)
            throw ShapeError("solveZ1Z2: ey-block has e-power " + std::to_string(md.power) +
                             ", expected 1");
        psi = Rational(1, 2) * md.gamma;
    }

    // The h-coefficient of the x-block must agree with psi; no projection.
    NcPoly residual = xCoeff - ugAlgebra().multiply(expandDelta(psi), NcPoly::gen(Gen::H));
    DeltaPoly psi1;
    if (!residual.isZero()) {
        MaximalDecomposition md;
        try {
            md = decomposeMaximalUg(residual);
        } catch (const ShapeError& e) {
            throw ShapeError(
                std::string("solveZ1Z2: x-block minus h psi is not central (h-coefficient "
                            "mismatch with the ey-block): ") +
                e.what());
        }
        if (md.power != 0)
            throw ShapeError("solveZ1Z2: x-block minus h psi has a leftover e-power");
        psi1 = md.gamma;
    }

    DeltaPoly z1 = applyFInverse(psi);
    DeltaPoly z2 = psi1 - applyG(z1);

    NcPoly rebuilt = commutatorWithX(z1) + appendGen(expandDelta(z2), Gen::X);
    if (!(rebuilt == c))
        throw DecompositionError("solveZ1Z2: reconstruction mismatch");
    return {std::move(z1), std::move(z2)};
}

Weight1Report weight1MaximalBasis(int maxDegree, const Algebra& algebra,
                                  const OracleLimits& limits) {
    if (!algebra.z().isZero())
        throw std::invalid_argument("weight1MaximalBasis: requires the graded algebra (z = 0)");

    Weight1Report rep;
    rep.maxDegree = maxDegree;
    rep.kernelBasis = adJointKernel({Gen::E}, maxDegree, algebra, limits, 1);

    const NcPoly t = tElement(algebra);
    std::vector<NcPoly> generated;
    for (int i = 0; 3 * i <= maxDegree; ++i) {
        NcPoly ti = algebra.pow(t, unsigned(i));
        for (int k = 0; 3 * i + 2 * k <= maxDegree + 1; ++k) {
            if (k >= 1) {
                NcPoly v = algebra.multiply(ti, commutatorWithX(DeltaPoly::power(unsigned(k))));
                if (!v.isZero() && maxTotalDegree(v) <= maxDegree) generated.push_back(std::move(v));
            }
            NcPoly w = algebra.multiply(
                ti, appendGen(expandDelta(DeltaPoly::power(unsigned(k))), Gen::X));
            if (!w.isZero() && maxTotalDegree(w) <= maxDegree) generated.push_back(std::move(w));
        }
    }
    rep.generatedBasis = std::move(generated);
    rep.verdict = compareSpan(rep.kernelBasis, rep.generatedBasis);
    return rep;
}

}  // namespace infhecke
