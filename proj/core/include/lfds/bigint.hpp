#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace lfds {

// Orders, cycle lengths and modular exponents are unbounded; polynomial
// coefficients stay in machine words.
using Int = boost::multiprecision::cpp_int;

inline Int int_pow(Int base, uint64_t exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int int_lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

}  // namespace lfds
