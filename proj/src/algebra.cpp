#include "infhecke/algebra.hpp"

#include <cassert>

namespace infhecke {

namespace {

// (base + shift)^n expanded as sum_k C(n,k) shift^(n-k) h^k; used for the
// closed-form swaps h^b <-> {e,y,x}. Returns the coefficient list by h-power.
std::vector<Rational> binomialShift(std::uint32_t n, long shift) {
    std::vector<Rational> out(n + 1);
    mpz_class binom;
    for (std::uint32_t k = 0; k <= n; ++k) {
        mpz_bin_uiui(binom.get_mpz_t(), n, k);
        mpz_class pw;
        mpz_class base(shift);
        mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), n - k);
        out[k] = Rational(binom * pw);
    }
    return out;
}

Monomial withExp(Monomial m, Gen g, std::uint32_t v) {
    m.exponent(g) = v;
    return m;
}

}  // namespace

NcPoly expandDelta(const DeltaPoly& q) {
    // The zero case returns before any static below is touched; this is what
    // lets the z = 0 helper Algebra construct itself through this function.
    if (q.isZero()) return NcPoly::zero();

    // Delta^k powers are z-independent, so one shared table serves all
    // Algebra instances.
    static std::mutex mu;
    static std::vector<NcPoly> powers;
    static const Algebra ug{DeltaPoly::zero()};
    const unsigned deg = unsigned(q.degree());
    {
        std::lock_guard<std::mutex> lock(mu);
        if (powers.empty()) {
            powers.push_back(NcPoly::one());
            // Delta = h^2 + 4ef - 2h, normal-ordered through the engine.
            NcPoly delta = ug.multiply(NcPoly::gen(Gen::H), NcPoly::gen(Gen::H)) +
                           Rational(4) * ug.multiply(NcPoly::gen(Gen::E), NcPoly::gen(Gen::F)) -
                           Rational(2) * NcPoly::gen(Gen::H);
            powers.push_back(std::move(delta));
        }
        while (powers.size() <= deg)
            powers.push_back(ug.multiply(powers.back(), powers[1]));
    }
    NcPoly out;
    std::lock_guard<std::mutex> lock(mu);
    for (unsigned k = 0; k <= deg; ++k) {
        Rational c = q.coeff(k);
        if (c != 0) out += c * powers[k];
    }
    return out;
}

std::map<int, NcPoly> weightDecompose(const NcPoly& p) {
    std::map<int, NcPoly> out;
    for (const auto& [m, c] : p.terms()) out[m.weight()].addTerm(m, c);
    return out;
}

Algebra::Algebra(DeltaPoly z) : z_(std::move(z)) { zExpanded_ = expandDelta(z_); }

NcPoly Algebra::multiply(const NcPoly& p, const NcPoly& q) const {
    NcPoly out;
    for (const auto& [m, c] : p.terms()) out += c * monoTimesPoly(m, q);
    return out;
}

NcPoly Algebra::pow(const NcPoly& p, unsigned n) const {
    NcPoly out = NcPoly::one();
    for (unsigned i = 0; i < n; ++i) out = multiply(out, p);
    return out;
}

NcPoly Algebra::commutator(const NcPoly& p, const NcPoly& q) const {
    return multiply(p, q) - multiply(q, p);
}

NcPoly Algebra::antiJ(const NcPoly& p) const {
    // On a PBW word, j reverses and maps letters: j(f^a h^b e^c y^d x^m) =
    // (-1)^(a+c) y^m x^d f^c h^b e^a, then normal-order.
    NcPoly out;
    for (const auto& [m, c] : p.terms()) {
        NcPoly img = NcPoly::monomial(Monomial{0, 0, 0, m.x, 0});
        img = multiply(img, NcPoly::monomial(Monomial{0, 0, 0, 0, m.y}));
        img = multiply(img, NcPoly::monomial(Monomial{m.e, 0, 0, 0, 0}));
        img = multiply(img, NcPoly::monomial(Monomial{0, m.h, 0, 0, 0}));
        img = multiply(img, NcPoly::monomial(Monomial{0, 0, m.f, 0, 0}));
        Rational sign = ((m.f + m.e) % 2 == 0) ? Rational(1) : Rational(-1);
        out += (c * sign) * img;
    }
    return out;
}

NcPoly Algebra::monoTimesPoly(const Monomial& m, const NcPoly& q) const {
    // (g1...gk) * q = g1*(g2*(...*(gk*q))): apply the word of m from its
    // rightmost letter inward.
    NcPoly acc = q;
    const Gen order[5] = {Gen::X, Gen::Y, Gen::E, Gen::H, Gen::F};
    for (Gen g : order)
        for (std::uint32_t i = 0; i < m.exponent(g); ++i) acc = leftMulPoly(g, acc);
    return acc;
}

NcPoly Algebra::leftMulPoly(Gen g, const NcPoly& p) const {
    NcPoly out;
    for (const auto& [m, c] : p.terms()) out += c * leftMulGen(g, m);
    return out;
}

NcPoly Algebra::leftMulGen(Gen g, const Monomial& m) const {
    const std::uint64_t key = (std::uint64_t(static_cast<int>(g)) << 60) | m.packed();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = leftMulCache_.find(key);
        if (it != leftMulCache_.end()) return it->second;
    }
    NcPoly value = leftMulGenUncached(g, m);
    std::lock_guard<std::mutex> lock(mu_);
    return leftMulCache_.emplace(key, std::move(value)).first->second;
}

NcPoly Algebra::leftMulGenUncached(Gen g, const Monomial& m) const {
    NcPoly out;
    switch (g) {
        case Gen::F:
            // f is minimal: prepend directly.
            out.addTerm(withExp(m, Gen::F, m.f + 1), Rational(1));
            return out;

        case Gen::H:
            // h f^a = f^a h - 2a f^a.
            out.addTerm(withExp(m, Gen::H, m.h + 1), Rational(1));
            if (m.f > 0) out.addTerm(m, Rational(-2) * Rational(long(m.f)));
            return out;

        case Gen::E: {
            // e f^a = f^a e + a f^(a-1)(h - (a-1)); e h^b = (h-2)^b e.
            auto hs = binomialShift(m.h, -2);
            for (std::uint32_t k = 0; k <= m.h; ++k) {
                if (hs[k] == 0) continue;
                Monomial t = m;
                t.h = k;
                t.e = m.e + 1;
                out.addTerm(t, hs[k]);
            }
            if (m.f > 0) {
                Rational a(long(m.f));
                Monomial lower = m;
                lower.f = m.f - 1;
                out.addTerm(withExp(lower, Gen::H, m.h + 1), a);
                if (m.f > 1) out.addTerm(lower, -a * Rational(long(m.f - 1)));
            }
            return out;
        }

        case Gen::Y: {
            // y f^a = f^a y; y h^b = (h+1)^b y; y e^c = e^c y - c e^(c-1) x.
            auto hs = binomialShift(m.h, 1);
            for (std::uint32_t k = 0; k <= m.h; ++k) {
                if (hs[k] == 0) continue;
                Monomial t = m;
                t.h = k;
                t.y = m.y + 1;
                out.addTerm(t, hs[k]);
            }
            if (m.e > 0) {
                NcPoly tail = xTimesYPow(m.y);  // x y^d
                if (m.x > 0) {
                    NcPoly shifted;
                    for (const auto& [tm, tc] : tail.terms())
                        shifted.addTerm(withExp(tm, Gen::X, tm.x + m.x), tc);
                    tail = std::move(shifted);
                }
                NcPoly prefix;  // f^a (h+1)^b e^(c-1)
                for (std::uint32_t k = 0; k <= m.h; ++k)
                    if (hs[k] != 0) prefix.addTerm(Monomial{m.f, k, m.e - 1, 0, 0}, hs[k]);
                out -= Rational(long(m.e)) * multiply(prefix, tail);
            }
            return out;
        }

        case Gen::X: {
            // x f^a = f^a x - a f^(a-1) y; x h^b = (h-1)^b x; x e^c = e^c x;
            // then x y^d through the deformation rule.
            auto hs = binomialShift(m.h, -1);
            NcPoly tail = xTimesYPow(m.y);
            if (m.x > 0) {
                NcPoly shifted;
                for (const auto& [tm, tc] : tail.terms())
                    shifted.addTerm(withExp(tm, Gen::X, tm.x + m.x), tc);
                tail = std::move(shifted);
            }
            NcPoly prefix;  // f^a (h-1)^b e^c
            for (std::uint32_t k = 0; k <= m.h; ++k)
                if (hs[k] != 0) prefix.addTerm(Monomial{m.f, k, m.e, 0, 0}, hs[k]);
            out = multiply(prefix, tail);
            if (m.f > 0) {
                Monomial rest = m;
                rest.f = 0;
                NcPoly yPart = leftMulGen(Gen::Y, rest);
                NcPoly shifted;
                for (const auto& [tm, tc] : yPart.terms())
                    shifted.addTerm(withExp(tm, Gen::F, tm.f + m.f - 1), tc);
                out -= Rational(long(m.f)) * shifted;
            }
            return out;
        }
    }
    return out;  // unreachable
}

NcPoly Algebra::xTimesYPow(std::uint32_t d) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (d < xyPowCache_.size()) return xyPowCache_[d];
    }
    NcPoly value;
    if (d == 0) {
        value = NcPoly::gen(Gen::X);
    } else {
        // x y^d = y (x y^(d-1)) + z y^(d-1); the recursion is on strictly
        // smaller d, which is the termination measure for the x,y block.
        NcPoly inner = xTimesYPow(d - 1);
        value = leftMulPoly(Gen::Y, inner);
        for (const auto& [zm, zc] : zExpanded_.terms()) {
            assert(zm.isUg());
            value.addTerm(withExp(zm, Gen::Y, d - 1), zc);
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    if (xyPowCache_.size() <= d) xyPowCache_.resize(d + 1);
    xyPowCache_[d] = value;
    return value;
}

}  // namespace infhecke
