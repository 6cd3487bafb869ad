#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "infhecke/algebra.hpp"
#include "test_util.hpp"

using namespace infhecke;
using namespace testutil;

TEST_CASE("multiply: generator goldens") {
    Algebra a0{DeltaPoly::zero()};

    // e*f = fe + h
    CHECK(a0.multiply(NcPoly::gen(Gen::E), NcPoly::gen(Gen::F)) ==
          mono(1, 0, 1, 0, 0) + mono(0, 1, 0, 0, 0));

    // the ten adjacent swaps, frozen one by one
    CHECK(a0.multiply(NcPoly::gen(Gen::H), NcPoly::gen(Gen::F)) ==
          mono(1, 1, 0, 0, 0) - Rational(2) * mono(1, 0, 0, 0, 0));
    CHECK(a0.multiply(NcPoly::gen(Gen::E), NcPoly::gen(Gen::H)) ==
          mono(0, 1, 1, 0, 0) - Rational(2) * mono(0, 0, 1, 0, 0));
    CHECK(a0.multiply(NcPoly::gen(Gen::Y), NcPoly::gen(Gen::F)) == mono(1, 0, 0, 1, 0));
    CHECK(a0.multiply(NcPoly::gen(Gen::Y), NcPoly::gen(Gen::H)) ==
          mono(0, 1, 0, 1, 0) + mono(0, 0, 0, 1, 0));
    CHECK(a0.multiply(NcPoly::gen(Gen::Y), NcPoly::gen(Gen::E)) ==
          mono(0, 0, 1, 1, 0) - mono(0, 0, 0, 0, 1));
    CHECK(a0.multiply(NcPoly::gen(Gen::X), NcPoly::gen(Gen::F)) ==
          mono(1, 0, 0, 0, 1) - mono(0, 0, 0, 1, 0));
    CHECK(a0.multiply(NcPoly::gen(Gen::X), NcPoly::gen(Gen::H)) ==
          mono(0, 1, 0, 0, 1) - mono(0, 0, 0, 0, 1));
    CHECK(a0.multiply(NcPoly::gen(Gen::X), NcPoly::gen(Gen::E)) == mono(0, 0, 1, 0, 1));
    CHECK(a0.multiply(NcPoly::gen(Gen::X), NcPoly::gen(Gen::Y)) == mono(0, 0, 0, 1, 1));
}

TEST_CASE("multiply: x*y picks up the deformation") {
    Algebra aD{DeltaPoly::delta()};
    // x*y = yx + h^2 + 4fe + 2h when z = Delta
    NcPoly expected = mono(0, 0, 0, 1, 1) + mono(0, 2, 0, 0, 0) +
                      Rational(4) * mono(1, 0, 1, 0, 0) + Rational(2) * mono(0, 1, 0, 0, 0);
    CHECK(aD.multiply(NcPoly::gen(Gen::X), NcPoly::gen(Gen::Y)) == expected);

    Algebra a1{DeltaPoly::one()};
    CHECK(a1.multiply(NcPoly::gen(Gen::X), NcPoly::gen(Gen::Y)) ==
          mono(0, 0, 0, 1, 1) + NcPoly::one());
}

TEST_CASE("expandDelta") {
    NcPoly delta = expandDelta(DeltaPoly::delta());
    CHECK(delta == mono(0, 2, 0, 0, 0) + Rational(4) * mono(1, 0, 1, 0, 0) +
                       Rational(2) * mono(0, 1, 0, 0, 0));
    CHECK(expandDelta(DeltaPoly::one()) == NcPoly::one());
    CHECK(expandDelta(DeltaPoly::zero()).isZero());

    // Delta and its powers are central in U(g)
    Algebra aD{DeltaPoly::delta()};
    NcPoly d2 = expandDelta(DeltaPoly::power(2));
    for (Gen g : {Gen::E, Gen::F, Gen::H})
        CHECK(aD.commutator(d2, NcPoly::gen(g)).isZero());
    CHECK(aD.commutator(delta, NcPoly::gen(Gen::E)).isZero());
}

TEST_CASE("commutator: paper goldens [Delta,x] and [Delta,y]") {
    for (const DeltaPoly& z : standardZSet()) {
        Algebra a{z};
        NcPoly delta = expandDelta(DeltaPoly::delta());
        NcPoly cx = a.commutator(delta, NcPoly::gen(Gen::X));
        CHECK(cx == Rational(2) * mono(0, 1, 0, 0, 1) - Rational(3) * mono(0, 0, 0, 0, 1) +
                        Rational(4) * mono(0, 0, 1, 1, 0));
        NcPoly cy = a.commutator(delta, NcPoly::gen(Gen::Y));
        CHECK(cy == Rational(-2) * mono(0, 1, 0, 1, 0) - Rational(3) * mono(0, 0, 0, 1, 0) +
                        Rational(4) * mono(1, 0, 0, 0, 1));
    }
}

TEST_CASE("weightDecompose") {
    Algebra aD{DeltaPoly::delta()};
    auto dx = weightDecompose(NcPoly::gen(Gen::X));
    CHECK(dx.size() == 1);
    CHECK(dx.at(1) == NcPoly::gen(Gen::X));

    NcPoly t = ev("e*y^2 + h*x*y - f*x^2", aD);
    auto dt = weightDecompose(t);
    CHECK(dt.size() == 1);
    CHECK(dt.at(0) == t);

    auto dey = weightDecompose(NcPoly::gen(Gen::E) + NcPoly::gen(Gen::Y));
    CHECK(dey.size() == 2);
    CHECK(dey.at(2) == NcPoly::gen(Gen::E));
    CHECK(dey.at(-1) == NcPoly::gen(Gen::Y));

    // each component is an ad(h) eigenvector
    std::mt19937_64 rng(7);
    for (int i = 0; i < 25; ++i) {
        NcPoly p = randomPoly(rng, 4, 5);
        NcPoly sum;
        for (const auto& [w, comp] : weightDecompose(p)) {
            CHECK(aD.commutator(NcPoly::gen(Gen::H), comp) == Rational(w) * comp);
            sum += comp;
        }
        CHECK(sum == p);
    }
}

TEST_CASE("filtrationDegree") {
    Algebra aD{DeltaPoly::delta()};
    CHECK(filtrationDegree(ev("e*y^2 + h*x*y - f*x^2", aD)) == 2);
    CHECK(filtrationDegree(expandDelta(DeltaPoly::delta())) == 0);
    CHECK(filtrationDegree(ev("x*y*x", aD)) == 3);
    CHECK_THROWS_AS(filtrationDegree(NcPoly::zero()), std::domain_error);
}

TEST_CASE("antiJ is an anti-involution fixing t and C[Delta]") {
    std::mt19937_64 rng(11);
    for (const DeltaPoly& z : standardZSet()) {
        Algebra a{z};
        NcPoly t = ev("e*y^2 + h*x*y - f*x^2", a);
        CHECK(a.antiJ(t) == t);

        NcPoly ef = a.multiply(NcPoly::gen(Gen::E), NcPoly::gen(Gen::F));
        CHECK(a.antiJ(ef) == ef);

        NcPoly xye = ev("x*y*e", a);
        CHECK(a.antiJ(a.antiJ(xye)) == xye);

        for (int i = 0; i < 10; ++i) {
            NcPoly p = randomPoly(rng, 3, 4);
            NcPoly q = randomPoly(rng, 3, 4);
            CHECK(a.antiJ(a.antiJ(p)) == p);
            CHECK(a.antiJ(a.multiply(p, q)) == a.multiply(a.antiJ(q), a.antiJ(p)));
        }
        for (int i = 0; i < 5; ++i) {
            NcPoly d = expandDelta(randomDelta(rng, 3));
            CHECK(a.antiJ(d) == d);
        }
    }
}

TEST_CASE("associativity and identity") {
    std::mt19937_64 rng(13);
    for (const DeltaPoly& z : standardZSet()) {
        Algebra a{z};
        for (int i = 0; i < 12; ++i) {
            NcPoly p = randomPoly(rng, 4, 5);
            NcPoly q = randomPoly(rng, 4, 5);
            NcPoly r = randomPoly(rng, 4, 5);
            CHECK(a.multiply(a.multiply(p, q), r) == a.multiply(p, a.multiply(q, r)));
            CHECK(a.multiply(NcPoly::one(), p) == p);
            CHECK(a.multiply(p, NcPoly::one()) == p);
        }
    }
}

TEST_CASE("Jacobi and antisymmetry") {
    std::mt19937_64 rng(17);
    Algebra a{DeltaPoly::delta()};
    for (int i = 0; i < 15; ++i) {
        NcPoly p = randomPoly(rng, 3, 4);
        NcPoly q = randomPoly(rng, 3, 4);
        NcPoly r = randomPoly(rng, 3, 4);
        NcPoly jac = a.commutator(a.commutator(p, q), r) +
                     a.commutator(a.commutator(q, r), p) +
                     a.commutator(a.commutator(r, p), q);
        CHECK(jac.isZero());
        CHECK(a.commutator(p, p).isZero());
        CHECK((a.commutator(p, q) + a.commutator(q, p)).isZero());
    }
}

TEST_CASE("weight additivity of products") {
    std::mt19937_64 rng(19);
    Algebra a{DeltaPoly::delta()};
    for (int i = 0; i < 20; ++i) {
        auto pw = weightDecompose(randomPoly(rng, 4, 4));
        auto qw = weightDecompose(randomPoly(rng, 4, 4));
        for (const auto& [wp, p] : pw) {
            for (const auto& [wq, q] : qw) {
                NcPoly prod = a.multiply(p, q);
                for (const auto& [m, c] : prod.terms()) CHECK(m.weight() == wp + wq);
            }
        }
    }
}

TEST_CASE("filtration: bound and associated-graded top") {
    std::mt19937_64 rng(23);
    Algebra a0{DeltaPoly::zero()};
    for (const DeltaPoly& z : standardZSet()) {
        Algebra a{z};
        for (int i = 0; i < 15; ++i) {
            NcPoly p = randomPoly(rng, 4, 4);
            NcPoly q = randomPoly(rng, 4, 4);
            NcPoly prod = a.multiply(p, q);
            if (prod.isZero()) continue;
            const int bound = filtrationDegree(p) + filtrationDegree(q);
            CHECK(filtrationDegree(prod) <= bound);
            // top filtration layer agrees with the z = 0 product
            NcPoly prod0 = a0.multiply(p, q);
            auto top = [bound](const NcPoly& v) {
                return selectTerms(v, [bound](const Monomial& m) {
                    return m.filtrationDegree() == bound;
                });
            };
            CHECK(top(prod) == top(prod0));
        }
    }
}

TEST_CASE("adjoint degree growth") {
    // Exact law for deg z <= 1: ad(e), ad(f), ad(h) preserve total degree and
    // ad(x), ad(y) grow by at most max(0, 2 deg z - 1). For deg z >= 2 each
    // x*y -> y*x + z application trades filtration 2 for degree 2 deg z and
    // applications can chain, giving the per-swap bound below.
    std::mt19937_64 rng(29);
    for (const DeltaPoly& z : {DeltaPoly::zero(), DeltaPoly::one(), DeltaPoly::delta()}) {
        Algebra a{z};
        const int xyGrowth = std::max(0, 2 * z.degree() - 1);
        for (int i = 0; i < 10; ++i) {
            NcPoly p = randomPoly(rng, 4, 4);
            const int dp = maxTotalDegree(p);
            for (Gen g : {Gen::E, Gen::F, Gen::H}) {
                NcPoly c = a.commutator(NcPoly::gen(g), p);
                CHECK(maxTotalDegree(c) <= dp);
            }
            for (Gen g : {Gen::X, Gen::Y}) {
                NcPoly c = a.commutator(NcPoly::gen(g), p);
                CHECK(maxTotalDegree(c) <= dp + xyGrowth);
            }
        }
    }
    for (unsigned dz : {2u, 3u}) {
        Algebra a{DeltaPoly::power(dz)};
        const int perSwap = 2 * int(dz) - 2;
        std::uniform_int_distribution<std::uint32_t> exp(0, 2);
        for (int i = 0; i < 60; ++i) {
            Monomial m{exp(rng), exp(rng), exp(rng), exp(rng), exp(rng)};
            const int filt = m.filtrationDegree();
            for (Gen g : {Gen::E, Gen::F, Gen::H}) {
                NcPoly c = a.commutator(NcPoly::gen(g), NcPoly::monomial(m));
                if (!c.isZero())
                    CHECK(maxTotalDegree(c) <= m.totalDegree() + (filt / 2) * perSwap);
            }
            for (Gen g : {Gen::X, Gen::Y}) {
                NcPoly c = a.commutator(NcPoly::gen(g), NcPoly::monomial(m));
                if (!c.isZero())
                    CHECK(maxTotalDegree(c) <=
                          m.totalDegree() + 1 + ((filt + 1) / 2) * perSwap);
            }
        }
    }
}

TEST_CASE("an Algebra is safely shareable between threads") {
    Algebra a{DeltaPoly::delta()};
    NcPoly t = ev("e*y^2 + h*x*y - f*x^2", a);
    NcPoly expected = a.multiply(t, t);
    std::vector<NcPoly> results(4);
    std::vector<std::thread> workers;
    for (int i = 0; i < 4; ++i)
        workers.emplace_back([&, i] { results[std::size_t(i)] = a.multiply(t, t); });
    for (auto& w : workers) w.join();
    for (const auto& r : results) CHECK(r == expected);
}
