#pragma once

#include <gmpxx.h>

#include <string>

namespace qgalois {

// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den > 0
// after canonicalization, which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qgalois
