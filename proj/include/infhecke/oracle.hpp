#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "infhecke/algebra.hpp"

namespace infhecke {

struct OracleLimits {
    /// Largest monomial basis a truncated computation may allocate;
    /// the default admits maxDegree 8 (C(13,5) = 1287).
    std::size_t maxBasisSize = 1287;
};

/// All PBW monomials of totalDegree <= maxDegree in graded-lex order.
struct TruncatedBasis {
    int maxDegree = 0;
    std::vector<Monomial> monomials;

    static TruncatedBasis build(int maxDegree, const OracleLimits& limits = {});

    std::size_t size() const { return monomials.size(); }
    /// Position in graded-lex order; -1 when outside the truncation.
    int indexOf(const Monomial& m) const;
};

/// Exact matrix of ad(g) = [g, .] between truncated bases: column j holds the
/// coordinates of commutator(g, monomial_j) in the codomain basis. The
/// codomain degree is maxDegree for g in {e,f,h} and maxDegree +
/// max(0, 2 deg z - 1) for g in {x,y}, which is enough to hold every image.
struct AdMatrix {
    Gen op = Gen::F;
    TruncatedBasis domain;
    TruncatedBasis codomain;
    std::vector<std::vector<std::pair<int, Rational>>> columns;  // sparse by row

    Rational entry(int row, int col) const;
};

AdMatrix adMatrix(Gen g, int maxDegree, const Algebra& algebra,
                  const OracleLimits& limits = {});

/// Joint kernel of the ad operators of `gens` on the degree-truncated space,
/// as canonically row-reduced polynomials. When `weight` is given, the
/// domain is restricted to monomials of that ad(h)-weight; this is exact for
/// any gen set containing h, since ad(h) is diagonal with the weight as
/// eigenvalue.
std::vector<NcPoly> adJointKernel(const std::vector<Gen>& gens, int maxDegree,
                                  const Algebra& algebra, const OracleLimits& limits = {},
                                  std::optional<int> weight = std::nullopt);

/// Basis of the centralizer of g = {e,f,h} at bounded total degree.
std::vector<NcPoly> gCentralizer(int maxDegree, const Algebra& algebra,
                                 const OracleLimits& limits = {});

/// Basis of the full center (joint kernel of all five ad operators).
std::vector<NcPoly> centerBrute(int maxDegree, const Algebra& algebra,
                                const OracleLimits& limits = {});

enum class SpanVerdict { Equal, FirstInSecond, SecondInFirst, Incomparable };

const char* spanVerdictName(SpanVerdict v);

inline std::ostream& operator<<(std::ostream& os, SpanVerdict v) {
    return os << spanVerdictName(v);
}

/// Exact span comparison by rank computation.
SpanVerdict compareSpan(const std::vector<NcPoly>& a, const std::vector<NcPoly>& b);

std::size_t spanRank(const std::vector<NcPoly>& vecs);

}  // namespace infhecke
