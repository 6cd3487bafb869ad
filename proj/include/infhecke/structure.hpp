#pragma once

#include <utility>
#include <vector>

#include "infhecke/algebra.hpp"
#include "infhecke/casimir.hpp"
#include "infhecke/oracle.hpp"

namespace infhecke {

/// True iff [e, p] = 0 (p is a highest-weight vector for the adjoint action).
bool isMaximal(const NcPoly& p, const Algebra& algebra);

/// A weight-2m maximal vector of U(g) written as expandDelta(gamma) * e^m.
/// (The classification says weight and e-power are tied by weight = 2m; the
/// coefficient of y^(2n) in a g-commuting element therefore decomposes with
/// e^n, not e^(2n).)
struct MaximalDecomposition {
    unsigned power = 0;
    DeltaPoly gamma;
};

/// Exact linear solve of u = sum_k gamma_k Delta^k e^m against the basis
/// {Delta^k e^m}. Requires u in U(g), weight-homogeneous of even nonnegative
/// weight 2m, and maximal; anything else is rejected.
MaximalDecomposition decomposeMaximalUg(const NcPoly& u);

/// Solve c = [z1, x] + z2 x for z1 (constant-free) and z2 in C[Delta].
/// c must normal-order as 2 psi e y + (h psi + psi1) x; the reconstruction
/// is re-checked exactly before returning.
std::pair<DeltaPoly, DeltaPoly> solveZ1Z2(const NcPoly& c);

struct Weight1Report {
    int maxDegree = 0;
    std::vector<NcPoly> kernelBasis;     // oracle: weight-1 maximal vectors
    std::vector<NcPoly> generatedBasis;  // t^i [Delta^k, x] and t^i Delta^k x
    SpanVerdict verdict = SpanVerdict::Incomparable;
};

/// Verify at bounded degree that the weight-1 maximal vectors of H (z = 0)
/// are spanned by t^i * [Delta^k, x] and t^i * Delta^k * x.
Weight1Report weight1MaximalBasis(int maxDegree, const Algebra& algebra,
                                  const OracleLimits& limits = {});

}  // namespace infhecke
