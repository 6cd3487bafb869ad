#pragma once

#include <optional>
#include <vector>

#include "infhecke/rational.hpp"

namespace infhecke::linalg {

using RatMatrix = std::vector<std::vector<Rational>>;

/// Kernel of the cols-wide matrix given by rows, computed with fraction-free
/// (Bareiss) elimination over arbitrary-precision integers after clearing
/// row denominators. The basis comes back row-reduced (each vector's first
/// nonzero coordinate is 1 and is the only nonzero in its column), which
/// makes it canonical for golden tests.
std::vector<std::vector<Rational>> kernelBasis(const RatMatrix& rows, std::size_t cols);

std::size_t rank(const RatMatrix& rows, std::size_t cols);

/// Exact solve of A x = b (A given as rows); nullopt when inconsistent.
/// Free variables, if any, are pinned to zero.
std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b);

/// Reduced row echelon form over the rationals, zero rows dropped.
std::vector<std::vector<Rational>> rowReduce(std::vector<std::vector<Rational>> rows);

}  // namespace infhecke::linalg
