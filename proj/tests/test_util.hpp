#pragma once

#include <random>
#include <vector>

#include "infhecke/algebra.hpp"
#include "infhecke/expr.hpp"

namespace testutil {

using namespace infhecke;

inline NcPoly mono(std::uint32_t f, std::uint32_t h, std::uint32_t e, std::uint32_t y,
                   std::uint32_t x, Rational c = Rational(1)) {
    return NcPoly::monomial(Monomial{f, h, e, y, x}, std::move(c));
}

/// Evaluate surface syntax in the given algebra; keeps goldens readable.
inline NcPoly ev(const char* text, const Algebra& a) { return evaluate(parse(text), a); }

inline Rational randomRational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 3);
    return rat(num(rng), den(rng));
}

/// Random normal-form element: at most maxTerms monomials of total degree
/// <= maxDegree, small rational coefficients.
inline NcPoly randomPoly(std::mt19937_64& rng, int maxDegree, int maxTerms) {
    std::uniform_int_distribution<int> terms(1, maxTerms);
    std::uniform_int_distribution<int> deg(0, maxDegree);
    NcPoly p;
    const int n = terms(rng);
    for (int t = 0; t < n; ++t) {
        int budget = deg(rng);
        Monomial m;
        for (Gen g : kGens) {
            if (budget == 0) break;
            std::uniform_int_distribution<int> take(0, budget);
            int k = take(rng);
            m.exponent(g) += std::uint32_t(k);
            budget -= k;
        }
        p.addTerm(m, randomRational(rng));
    }
    return p;
}

inline DeltaPoly randomDelta(std::mt19937_64& rng, int maxDegree) {
    std::uniform_int_distribution<int> deg(0, maxDegree);
    DeltaPoly q;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k) q.setCoeff(unsigned(k), randomRational(rng));
    return q;
}

/// Deformation parameters exercised across the property suites.
inline std::vector<DeltaPoly> standardZSet() {
    DeltaPoly d = DeltaPoly::delta();
    return {DeltaPoly::zero(), DeltaPoly::one(), d, d * d - DeltaPoly(Rational(3))};
}

}  // namespace testutil
