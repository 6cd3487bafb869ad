#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <tuple>

namespace infhecke {

/// The five generators in normal-order precedence f < h < e < y < x.
enum class Gen : std::uint8_t { F = 0, H = 1, E = 2, Y = 3, X = 4 };

inline constexpr std::array<Gen, 5> kGens{Gen::F, Gen::H, Gen::E, Gen::Y, Gen::X};

inline constexpr char genName(Gen g) {
    constexpr char names[5] = {'f', 'h', 'e', 'y', 'x'};
    return names[static_cast<int>(g)];
}

/// Adjoint h-weight of a generator: (f,h,e,y,x) -> (-2,0,2,-1,1).
inline constexpr int genWeight(Gen g) {
    constexpr int w[5] = {-2, 0, 2, -1, 1};
    return w[static_cast<int>(g)];
}

/// PBW monomial f^f h^h e^e y^y x^x. Exponents are kept small enough to
/// pack into 12 bits each (asserted), which gives a cheap 64-bit hash key.
struct Monomial {
    std::uint32_t f = 0, h = 0, e = 0, y = 0, x = 0;

    static Monomial ofGen(Gen g, std::uint32_t k = 1) {
        Monomial m;
        m.exponent(g) = k;
        return m;
    }

    std::uint32_t& exponent(Gen g) {
        switch (g) {
            case Gen::F: return f;
            case Gen::H: return h;
            case Gen::E: return e;
            case Gen::Y: return y;
            default: return x;
        }
    }
    std::uint32_t exponent(Gen g) const {
        return const_cast<Monomial*>(this)->exponent(g);
    }

    int totalDegree() const { return int(f + h + e + y + x); }
    /// x,y count 1, U(g) counts 0.
    int filtrationDegree() const { return int(y + x); }
    int weight() const { return -2 * int(f) + 2 * int(e) - int(y) + int(x); }

    bool isOne() const { return f == 0 && h == 0 && e == 0 && y == 0 && x == 0; }
    /// No x or y letters, i.e. lies in U(g).
    bool isUg() const { return y == 0 && x == 0; }

    std::uint64_t packed() const {
        assert(f < 4096 && h < 4096 && e < 4096 && y < 4096 && x < 4096);
        return (std::uint64_t(f) << 48) | (std::uint64_t(h) << 36) |
               (std::uint64_t(e) << 24) | (std::uint64_t(y) << 12) | std::uint64_t(x);
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical basis order: graded, then lexicographic on (f,h,e,y,x).
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.totalDegree(), db = b.totalDegree();
        if (da != db) return da < db;
        return std::tie(a.f, a.h, a.e, a.y, a.x) < std::tie(b.f, b.h, b.e, b.y, b.x);
    }
};

}  // namespace infhecke
