#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace confighom {

// Arbitrary-precision integer. All exact linear algebra runs over this type;
// intermediate entries in elimination can exceed 64 bits long before the
// invariant factors themselves do.
using Int = mpz_class;

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

// Number of ordered r-tuples of nonnegative integers summing to s,
// i.e. compositions of s into r (possibly zero) parts: C(s+r-1, r-1).
// The r = 0 column is the empty tuple: 1 when s = 0, else 0.
inline Int weak_composition_count(long r, long s) {
    if (r < 0 || s < 0) return 0;
    if (r == 0) return s == 0 ? 1 : 0;
    return binomial(s + r - 1, r - 1);
}

inline long popcount_long(long k) {
    long c = 0;
    unsigned long u = static_cast<unsigned long>(k);
    while (u) {
        c += static_cast<long>(u & 1u);
        u >>= 1;
    }
    return c;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

} // namespace confighom
