#pragma once

#include <map>
#include <stdexcept>

#include "infhecke/monomial.hpp"
#include "infhecke/rational.hpp"

namespace infhecke {

/// Element of H_z in PBW normal form: a finitely supported map
/// Monomial -> Rational with no stored zero coefficients. Two NcPoly are
/// equal iff their term maps are equal, so normal forms are canonical.
class NcPoly {
  public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    NcPoly() = default;

    static NcPoly zero() { return NcPoly(); }
    static NcPoly one() { return monomial(Monomial{}); }
    static NcPoly constant(Rational c) { return monomial(Monomial{}, std::move(c)); }
    static NcPoly gen(Gen g) { return monomial(Monomial::ofGen(g)); }
    static NcPoly monomial(const Monomial& m, Rational c = Rational(1)) {
        NcPoly p;
        p.addTerm(m, std::move(c));
        return p;
    }

    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void addTerm(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    NcPoly& operator+=(const NcPoly& o) {
        for (const auto& [m, c] : o.terms_) addTerm(m, c);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o) {
        for (const auto& [m, c] : o.terms_) addTerm(m, -c);
        return *this;
    }
    NcPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator-(NcPoly a) { return a *= Rational(-1); }
    friend NcPoly operator*(NcPoly a, const Rational& s) { return a *= s; }
    friend NcPoly operator*(const Rational& s, NcPoly a) { return a *= s; }

    friend bool operator==(const NcPoly&, const NcPoly&) = default;

  private:
    TermMap terms_;
};

/// max(d+m) over the support; undefined on zero by design.
inline int filtrationDegree(const NcPoly& p) {
    if (p.isZero())
        throw std::domain_error("filtrationDegree: undefined for the zero element");
    int best = 0;
    for (const auto& [m, c] : p.terms()) best = std::max(best, m.filtrationDegree());
    return best;
}

/// max total degree over the support, -1 for zero.
inline int maxTotalDegree(const NcPoly& p) {
    int best = -1;
    for (const auto& [m, c] : p.terms()) best = std::max(best, m.totalDegree());
    return best;
}

template <class Pred>
NcPoly selectTerms(const NcPoly& p, Pred&& keep) {
    NcPoly out;
    for (const auto& [m, c] : p.terms())
        if (keep(m)) out.addTerm(m, c);
    return out;
}

/// Split into ad(h)-eigencomponents; the components sum back to p.
std::map<int, NcPoly> weightDecompose(const NcPoly& p);

/// True when every monomial lies in U(g) (no x,y letters).
inline bool isUgElement(const NcPoly& p) {
    for (const auto& [m, c] : p.terms())
        if (!m.isUg()) return false;
    return true;
}

}  // namespace infhecke
