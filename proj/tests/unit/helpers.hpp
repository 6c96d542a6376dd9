#pragma once

#include <vector>

#include "negabeta/numerics.hpp"

namespace testing_support {

using namespace negabeta;

inline Rational frac(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

inline BetaSpec rat(long p, long q = 1) { return beta_from_rational(BigInt(p), BigInt(q)); }

inline BetaSpec poly_root(std::vector<long> coeffs, long lo_num, long lo_den, long hi_num, long hi_den) {
    std::vector<BigInt> c;
    for (long x : coeffs) c.emplace_back(x);
    return beta_from_poly(c, {Rational(lo_num, lo_den), Rational(hi_num, hi_den)});
}

inline BetaSpec golden() { return poly_root({1, -1, -1}, 1, 1, 2, 1); }
inline BetaSpec plastic() { return poly_root({1, 0, -1, -1}, 1, 1, 2, 1); }
// x^5 - 2x^4 - 2x^3 - x^2 + x + 1, root near 2.7843: d(l) = 2012(1)
inline BetaSpec quintic() { return poly_root({1, -2, -2, -1, 1, 1}, 27, 10, 29, 10); }

} // namespace testing_support
