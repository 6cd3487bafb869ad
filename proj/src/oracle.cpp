#include "infhecke/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "infhecke/errors.hpp"
#include "infhecke/linalg.hpp"

namespace infhecke {

namespace {

std::size_t binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b.get_ui();
}

// Exact for deg z <= 1. For deg z >= 2 chained swaps can compound (each
// x*y -> y*x + z application trades filtration 2 for degree 2 deg z), so
// adMatrix additionally widens the codomain to the actual image degrees.
int moduleGrowth(Gen g, const DeltaPoly& z) {
    if (g == Gen::X || g == Gen::Y) return std::max(0, 2 * z.degree() - 1);
    return 0;
}

}  // namespace

TruncatedBasis TruncatedBasis::build(int maxDegree, const OracleLimits& limits) {
    if (maxDegree < 0) throw std::invalid_argument("TruncatedBasis: negative degree");
    const std::size_t size = binomial(unsigned(maxDegree) + 5, 5);
    if (size > limits.maxBasisSize)
        throw ResourceLimitError("truncated basis of size " + std::to_string(size) +
                                 " exceeds the limit " + std::to_string(limits.maxBasisSize));
    TruncatedBasis b;
    b.maxDegree = maxDegree;
    b.monomials.reserve(size);
    const std::uint32_t n = std::uint32_t(maxDegree);
    for (std::uint32_t f = 0; f <= n; ++f)
        for (std::uint32_t h = 0; f + h <= n; ++h)
            for (std::uint32_t e = 0; f + h + e <= n; ++e)
                for (std::uint32_t y = 0; f + h + e + y <= n; ++y)
                    for (std::uint32_t x = 0; f + h + e + y + x <= n; ++x)
                        b.monomials.push_back(Monomial{f, h, e, y, x});
    std::sort(b.monomials.begin(), b.monomials.end(), GradedLexLess{});
    return b;
}

int TruncatedBasis::indexOf(const Monomial& m) const {
    auto it = std::lower_bound(monomials.begin(), monomials.end(), m, GradedLexLess{});
    if (it == monomials.end() || !(*it == m)) return -1;
    return int(it - monomials.begin());
}

Rational AdMatrix::entry(int row, int col) const {
    for (const auto& [r, v] : columns.at(std::size_t(col)))
        if (r == row) return v;
    return Rational(0);
}

AdMatrix adMatrix(Gen g, int maxDegree, const Algebra& algebra, const OracleLimits& limits) {
    AdMatrix m;
    m.op = g;
    m.domain = TruncatedBasis::build(maxDegree, limits);
    const NcPoly gp = NcPoly::gen(g);
    std::vector<NcPoly> images;
    images.reserve(m.domain.size());
    int codomainDegree = maxDegree + moduleGrowth(g, algebra.z());
    for (const Monomial& mono : m.domain.monomials) {
        images.push_back(algebra.commutator(gp, NcPoly::monomial(mono)));
        codomainDegree = std::max(codomainDegree, maxTotalDegree(images.back()));
    }
    m.codomain = TruncatedBasis::build(codomainDegree, limits);
    m.columns.resize(m.domain.size());
    for (std::size_t j = 0; j < images.size(); ++j) {
        for (const auto& [mono, coeff] : images[j].terms()) {
            int row = m.codomain.indexOf(mono);
            if (row < 0) throw std::logic_error("adMatrix: image escaped the codomain");
            m.columns[j].emplace_back(row, coeff);
        }
    }
    return m;
}

std::vector<NcPoly> adJointKernel(const std::vector<Gen>& gens, int maxDegree,
                                  const Algebra& algebra, const OracleLimits& limits,
                                  std::optional<int> weight) {
    TruncatedBasis full = TruncatedBasis::build(maxDegree, limits);
    std::vector<Monomial> domain;
    for (const Monomial& m : full.monomials)
        if (!weight || m.weight() == *weight) domain.push_back(m);

    const std::size_t cols = domain.size();
    // Stacked coordinate rows of all ad images, keyed by (generator, monomial).
    std::unordered_map<std::uint64_t, std::size_t> rowIndex;
    linalg::RatMatrix rows;
    for (std::size_t j = 0; j < cols; ++j) {
        NcPoly basisElem = NcPoly::monomial(domain[j]);
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            NcPoly im = algebra.commutator(NcPoly::gen(gens[gi]), basisElem);
            for (const auto& [mono, coeff] : im.terms()) {
                std::uint64_t key = (std::uint64_t(gi) << 61) | mono.packed();
                auto [it, inserted] = rowIndex.emplace(key, rows.size());
                if (inserted) rows.emplace_back(cols, Rational(0));
                rows[it->second][j] = coeff;
            }
        }
    }

    std::vector<NcPoly> basis;
    for (const auto& vec : linalg::kernelBasis(rows, cols)) {
        NcPoly p;
        for (std::size_t j = 0; j < cols; ++j)
            if (vec[j] != 0) p.addTerm(domain[j], vec[j]);
        basis.push_back(std::move(p));
    }
    return basis;
}

std::vector<NcPoly> gCentralizer(int maxDegree, const Algebra& algebra,
                                 const OracleLimits& limits) {
    // Any joint-kernel vector lies in ker ad(h), i.e. is supported on
    // weight-0 monomials, so the elimination runs on that slice.
    return adJointKernel({Gen::E, Gen::F, Gen::H}, maxDegree, algebra, limits, 0);
}

std::vector<NcPoly> centerBrute(int maxDegree, const Algebra& algebra,
                                const OracleLimits& limits) {
    return adJointKernel({Gen::E, Gen::F, Gen::H, Gen::X, Gen::Y}, maxDegree, algebra,
                         limits, 0);
}

namespace {

linalg::RatMatrix coordinateRows(const std::vector<NcPoly>& vecs,
                                 const std::vector<Monomial>& support) {
    std::map<Monomial, std::size_t, GradedLexLess> index;
    for (std::size_t i = 0; i < support.size(); ++i) index.emplace(support[i], i);
    linalg::RatMatrix rows;
    for (const auto& p : vecs) {
        std::vector<Rational> row(support.size(), Rational(0));
        for (const auto& [m, c] : p.terms()) row[index.at(m)] = c;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Monomial> unionSupport(const std::vector<NcPoly>& a,
                                   const std::vector<NcPoly>& b) {
    std::set<Monomial, GradedLexLess> s;
    for (const auto& p : a)
        for (const auto& [m, c] : p.terms()) s.insert(m);
    for (const auto& p : b)
        for (const auto& [m, c] : p.terms()) s.insert(m);
    return {s.begin(), s.end()};
}

}  // namespace

const char* spanVerdictName(SpanVerdict v) {
    switch (v) {
        case SpanVerdict::Equal: return "equal";
        case SpanVerdict::FirstInSecond: return "first-inside-second";
        case SpanVerdict::SecondInFirst: return "second-inside-first";
        default: return "incomparable";
    }
}

std::size_t spanRank(const std::vector<NcPoly>& vecs) {
    auto support = unionSupport(vecs, {});
    return linalg::rank(coordinateRows(vecs, support), support.size());
}

SpanVerdict compareSpan(const std::vector<NcPoly>& a, const std::vector<NcPoly>& b) {
    auto support = unionSupport(a, b);
    auto rowsA = coordinateRows(a, support);
    auto rowsB = coordinateRows(b, support);
    std::size_t rankA = linalg::rank(rowsA, support.size());
    std::size_t rankB = linalg::rank(rowsB, support.size());
    linalg::RatMatrix both = rowsA;
    both.insert(both.end(), rowsB.begin(), rowsB.end());
    std::size_t rankAB = linalg::rank(both, support.size());
    if (rankAB == rankA && rankAB == rankB) return SpanVerdict::Equal;
    if (rankAB == rankB) return SpanVerdict::FirstInSecond;
    if (rankAB == rankA) return SpanVerdict::SecondInFirst;
    return SpanVerdict::Incomparable;
}

}  // namespace infhecke
