#include "infhecke/casimir.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace infhecke {

namespace {

// Full table up to the largest n seen so far; F and G on a degree-n input
// need every row <= n anyway.
class FnGnTable {
  public:
    std::pair<DeltaPoly, DeltaPoly> row(unsigned n) {
        std::lock_guard<std::mutex> lock(mu_);
        ensure(n);
        return rows_[n];
    }

  private:
    void ensure(unsigned n) {
        if (rows_.empty()) rows_.emplace_back(DeltaPoly::zero(), DeltaPoly::zero());
        while (rows_.size() <= n) {
            const unsigned k = unsigned(rows_.size()) - 1;  // extend from row k
            const auto& [fk, gk] = rows_[k];
            DeltaPoly dk = DeltaPoly::power(k, Rational(2));
            DeltaPoly fNext = dk + fk * DeltaPoly::delta() - fk - Rational(2) * gk;
            DeltaPoly gNext = DeltaPoly::power(k, Rational(-3)) +
                              gk * DeltaPoly::delta() + Rational(3) * gk -
                              Rational(2) * (fk * DeltaPoly::delta());
            rows_.emplace_back(std::move(fNext), std::move(gNext));
        }
    }

    std::mutex mu_;
    std::vector<std::pair<DeltaPoly, DeltaPoly>> rows_;
};

FnGnTable& table() {
    static FnGnTable t;
    return t;
}

const Algebra& ugAlgebra() {
    static const Algebra ug{DeltaPoly::zero()};
    return ug;
}

// Right-append a single x or y letter to a U(g)-only polynomial; the result
// is already normal-ordered.
NcPoly appendModuleGen(const NcPoly& ug, Gen g) {
    NcPoly out;
    for (const auto& [m, c] : ug.terms()) {
        Monomial t = m;
        t.exponent(g) += 1;
        out.addTerm(t, c);
    }
    return out;
}

}  // namespace

std::pair<DeltaPoly, DeltaPoly> fnGn(unsigned n) { return table().row(n); }

DeltaPoly applyF(const DeltaPoly& q) {
    DeltaPoly out;
    for (int k = 0; k <= q.degree(); ++k) {
        Rational c = q.coeff(unsigned(k));
        if (c != 0) out += c * fnGn(unsigned(k)).first;
    }
    return out;
}

DeltaPoly applyG(const DeltaPoly& q) {
    DeltaPoly out;
    for (int k = 0; k <= q.degree(); ++k) {
        Rational c = q.coeff(unsigned(k));
        if (c != 0) out += c * fnGn(unsigned(k)).second;
    }
    return out;
}

DeltaPoly applyFInverse(const DeltaPoly& q) {
    // Back-substitution against the f_n rows: deg f_n = n-1, lead 2n, so a
    // degree-k residual is matched by the Delta^(k+1) coefficient.
    DeltaPoly residual = q;
    DeltaPoly out;
    while (!residual.isZero()) {
        unsigned n = unsigned(residual.degree()) + 1;
        Rational lead = residual.leadingCoeff() / Rational(2 * long(n));
        out.setCoeff(n, out.coeff(n) + lead);
        residual -= lead * fnGn(n).first;
        if (!residual.isZero() && residual.degree() >= int(n)) {
            throw std::logic_error("applyFInverse: residual degree did not drop");
        }
    }
    return out;
}

NcPoly commutatorWithX(const DeltaPoly& q) {
    const Algebra& ug = ugAlgebra();
    NcPoly fPart = expandDelta(applyF(q));
    NcPoly gPart = expandDelta(applyG(q));
    NcPoly xCoeff = ug.multiply(fPart, NcPoly::gen(Gen::H)) + gPart;
    NcPoly eCoeff = ug.multiply(fPart, NcPoly::gen(Gen::E));
    return appendModuleGen(xCoeff, Gen::X) + Rational(2) * appendModuleGen(eCoeff, Gen::Y);
}

NcPoly commutatorWithY(const DeltaPoly& q) {
    const Algebra& ug = ugAlgebra();
    NcPoly fPart = expandDelta(applyF(q));
    NcPoly gPart = expandDelta(applyG(q));
    NcPoly xCoeff = ug.multiply(fPart, NcPoly::gen(Gen::F));
    NcPoly yCoeff = gPart - ug.multiply(fPart, NcPoly::gen(Gen::H));
    return Rational(2) * appendModuleGen(xCoeff, Gen::X) + appendModuleGen(yCoeff, Gen::Y);
}

}  // namespace infhecke
