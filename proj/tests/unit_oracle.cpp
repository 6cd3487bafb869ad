#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "infhecke/center.hpp"
#include "infhecke/errors.hpp"
#include "infhecke/oracle.hpp"
#include "test_util.hpp"

using namespace infhecke;
using namespace testutil;

namespace {

std::size_t choose(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b.get_ui();
}

}  // namespace

TEST_CASE("TruncatedBasis: size, order, PBW counts") {
    for (int n = 0; n <= 6; ++n) {
        TruncatedBasis b = TruncatedBasis::build(n);
        CHECK(b.size() == choose(unsigned(n) + 5, 5));
        // homogeneous layer N has C(N+4, 4) monomials
        for (int N = 0; N <= n; ++N) {
            std::size_t cnt = 0;
            for (const auto& m : b.monomials)
                if (m.totalDegree() == N) ++cnt;
            CHECK(cnt == choose(unsigned(N) + 4, 4));
        }
        // graded-lex, deterministic, indexOf is the inverse
        for (std::size_t i = 1; i < b.size(); ++i)
            CHECK(GradedLexLess{}(b.monomials[i - 1], b.monomials[i]));
        CHECK(b.indexOf(b.monomials.back()) == int(b.size()) - 1);
    }
    CHECK(TruncatedBasis::build(1).monomials[0] == Monomial{});
    CHECK_THROWS_AS(TruncatedBasis::build(9), ResourceLimitError);
}

TEST_CASE("adMatrix: h is diagonal with weight eigenvalues") {
    Algebra aD{DeltaPoly::delta()};
    AdMatrix m = adMatrix(Gen::H, 3, aD);
    for (std::size_t j = 0; j < m.domain.size(); ++j) {
        const Monomial& mon = m.domain.monomials[j];
        for (const auto& [row, v] : m.columns[j]) {
            CHECK(row == m.codomain.indexOf(mon));
            CHECK(v == Rational(mon.weight()));
        }
        if (mon.weight() == 0) CHECK(m.columns[j].empty());
    }
}

TEST_CASE("adMatrix: goldens") {
    Algebra aD{DeltaPoly::delta()};

    AdMatrix m1 = adMatrix(Gen::H, 1, aD);
    int xj = m1.domain.indexOf(Monomial::ofGen(Gen::X));
    int yj = m1.domain.indexOf(Monomial::ofGen(Gen::Y));
    CHECK(m1.entry(m1.codomain.indexOf(Monomial::ofGen(Gen::X)), xj) == Rational(1));
    CHECK(m1.entry(m1.codomain.indexOf(Monomial::ofGen(Gen::Y)), yj) == Rational(-1));

    // column of y^2 under ad(e) is 2yx + z
    AdMatrix me = adMatrix(Gen::E, 2, aD);
    int y2 = me.domain.indexOf(Monomial{0, 0, 0, 2, 0});
    NcPoly expected = Rational(2) * mono(0, 0, 0, 1, 1) + aD.zExpanded();
    NcPoly got;
    for (const auto& [row, v] : me.columns[std::size_t(y2)])
        got.addTerm(me.codomain.monomials[std::size_t(row)], v);
    CHECK(got == expected);

    // rank of ad(e) at degree 0 is 0
    AdMatrix m0 = adMatrix(Gen::E, 0, aD);
    CHECK(m0.columns.size() == 1);
    CHECK(m0.columns[0].empty());
}

TEST_CASE("adMatrix: codomain absorbs every image") {
    // deg z <= 1 keeps the formula codomains: maxDegree for e,f,h and
    // maxDegree + max(0, 2 deg z - 1) for x,y.
    Algebra aD{DeltaPoly::delta()};
    CHECK(adMatrix(Gen::E, 3, aD).codomain.maxDegree == 3);
    CHECK(adMatrix(Gen::X, 3, aD).codomain.maxDegree == 4);

    // deg z >= 2: [e, y^2] = 2yx + z etc. force wider codomains; adMatrix
    // must widen rather than clip (it throws if an image escapes).
    Algebra a2{DeltaPoly::power(2)};
    for (Gen g : kGens) {
        AdMatrix m = adMatrix(g, 3, a2);
        CHECK(m.codomain.maxDegree >= 3);
    }
    CHECK(adMatrix(Gen::E, 3, a2).codomain.maxDegree >= 4);
}

TEST_CASE("gCentralizer goldens") {
    OracleLimits lim;

    Algebra aD{DeltaPoly::delta()};
    auto basis6 = gCentralizer(6, aD, lim);
    // The monomial span {Delta^i t_z^j : 2i + 4j <= 6} sits strictly inside:
    // total degree is not monomially graded over that basis, and the
    // combination w = t_z^2 - 1/2 Delta^2 t_z + 1/16 Delta^4 drops to
    // degree 6. Kernel dimension is 7, not 6.
    CHECK(basis6.size() == 7);
    NcPoly tz = centralElement(aD).tz;
    std::vector<NcPoly> monomials;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; 2 * i + 4 * j <= 6; ++j)
            monomials.push_back(aD.multiply(expandDelta(DeltaPoly::power(unsigned(i))),
                                            aD.pow(tz, unsigned(j))));
    CHECK(compareSpan(monomials, basis6) == SpanVerdict::FirstInSecond);

    DeltaPoly corr;
    corr.setCoeff(4, Rational(1, 16));
    NcPoly witness = aD.multiply(tz, tz) -
                     Rational(1, 2) * aD.multiply(expandDelta(DeltaPoly::power(2)), tz) +
                     expandDelta(corr);
    CHECK(maxTotalDegree(witness) == 6);
    auto withWitness = monomials;
    withWitness.push_back(witness);
    CHECK(compareSpan(basis6, withWitness) == SpanVerdict::Equal);

    // The centralizer description, symbolically: every kernel element lies in
    // C[Delta][t_z].
    for (const NcPoly& p : basis6) {
        NcPoly rebuilt;
        for (const auto& term : expressInCenter(p, aD))
            rebuilt += aD.multiply(expandDelta(term.gamma), aD.pow(tz, term.power));
        CHECK(rebuilt == p);
    }

    auto basis0 = gCentralizer(0, aD, lim);
    REQUIRE(basis0.size() == 1);
    CHECK(basis0[0] == NcPoly::one());

    Algebra a0{DeltaPoly::zero()};
    auto basis2 = gCentralizer(2, a0, lim);
    CHECK(basis2.size() == 2);
    std::vector<NcPoly> oneAndDelta{NcPoly::one(), expandDelta(DeltaPoly::delta())};
    CHECK(compareSpan(basis2, oneAndDelta) == SpanVerdict::Equal);
}

TEST_CASE("centerBrute goldens") {
    OracleLimits lim;
    Algebra aD{DeltaPoly::delta()};

    auto c6 = centerBrute(6, aD, lim);
    CHECK(c6.size() == 2);
    NcPoly tz = centralElement(aD).tz;
    std::vector<NcPoly> expected{NcPoly::one(), tz};
    CHECK(compareSpan(c6, expected) == SpanVerdict::Equal);

    auto c3 = centerBrute(3, aD, lim);
    REQUIRE(c3.size() == 1);
    CHECK(c3[0] == NcPoly::one());

    Algebra a0{DeltaPoly::zero()};
    auto c2 = centerBrute(2, a0, lim);
    REQUIRE(c2.size() == 1);
    CHECK(c2[0] == NcPoly::one());
}

TEST_CASE("weight-slice kernel equals the unrestricted joint kernel") {
    // Cross-validation of the ad(h)-eigenspace reduction at maxDegree 3.
    for (const DeltaPoly& z : {DeltaPoly::zero(), DeltaPoly::delta()}) {
        Algebra a{z};
        auto sliced = adJointKernel({Gen::E, Gen::F, Gen::H}, 3, a, OracleLimits{}, 0);
        auto full = adJointKernel({Gen::E, Gen::F, Gen::H}, 3, a, OracleLimits{});
        CHECK(compareSpan(sliced, full) == SpanVerdict::Equal);
        auto slicedC = adJointKernel({Gen::E, Gen::F, Gen::H, Gen::X, Gen::Y}, 3, a,
                                     OracleLimits{}, 0);
        auto fullC = adJointKernel({Gen::E, Gen::F, Gen::H, Gen::X, Gen::Y}, 3, a,
                                   OracleLimits{});
        CHECK(compareSpan(slicedC, fullC) == SpanVerdict::Equal);
    }
}

TEST_CASE("oracle outputs commute symbolically (cross-validation)") {
    Algebra aD{DeltaPoly::delta()};
    for (const NcPoly& p : gCentralizer(4, aD)) {
        for (Gen g : {Gen::E, Gen::F, Gen::H})
            CHECK(aD.commutator(p, NcPoly::gen(g)).isZero());
    }
    for (const NcPoly& p : centerBrute(4, aD)) {
        for (Gen g : kGens) CHECK(aD.commutator(p, NcPoly::gen(g)).isZero());
    }
}

TEST_CASE("compareSpan") {
    NcPoly x = NcPoly::gen(Gen::X), y = NcPoly::gen(Gen::Y);
    CHECK(compareSpan({x}, {Rational(2) * x}) == SpanVerdict::Equal);
    CHECK(compareSpan({x}, {x, y}) == SpanVerdict::FirstInSecond);
    CHECK(compareSpan({x, y}, {y}) == SpanVerdict::SecondInFirst);
    CHECK(compareSpan({x + y}, {x - y}) == SpanVerdict::Incomparable);
    CHECK(compareSpan({}, {}) == SpanVerdict::Equal);
    CHECK(compareSpan({}, {x}) == SpanVerdict::FirstInSecond);
}
