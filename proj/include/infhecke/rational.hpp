#pragma once

#include <gmpxx.h>

#include <string>

namespace infhecke {

/// Exact arbitrary-precision rational scalar. No floating point anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Canonical "p" / "p/q" form (q > 0, gcd(p,q)=1).
inline std::string ratStr(const Rational& r) { return r.get_str(); }

}  // namespace infhecke
