#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lring {

// Exact arbitrary-precision integer. Coefficients of the universal
// polynomials grow combinatorially, so fixed-width arithmetic is out.
using Int = boost::multiprecision::cpp_int;

inline Int int_pow(const Int& base, unsigned e) {
    Int r = 1, b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

// binom(x, n) = x(x-1)...(x-n+1) / n!, integer-valued for every integer x
// including negatives (falling-factorial form).
inline Int binomial(const Int& x, unsigned n) {
    Int num = 1;
    for (unsigned i = 0; i < n; ++i) num *= x - i;
    Int den = 1;
    for (unsigned i = 2; i <= n; ++i) den *= i;
    return num / den;  // division is exact
}

}  // namespace lring
