#pragma once

#include <cstdint>

#include "lfds/bigint.hpp"
#include "lfds/factor.hpp"
#include "lfds/poly.hpp"

namespace lfds {

// Order data for a primary modulus G^t.
struct OrderRecord {
    Int base_order;  // O(F, G)
    int exponent;    // t
    // Greatest s with G^s | F^base_order - 1, capped at t (larger values
    // cannot change any order up to exponent t).
    int saturation;
    Int order;  // O(F, G^t) = p^k * base_order
};

// Least k >= 1 with F^k = 1 mod G, for irreducible G coprime with F; relies
// on O(F, G) | q^deg(G) - 1 and strips prime factors of that bound.
// Constant nonzero G yields 1. q^deg(G) - 1 must fit in 63 bits.
Int order_irreducible(const GrPoly& F, const GrPoly& G);

// O(F, G^t) via the saturation exponent: the least p^k with t <= s*p^k.
OrderRecord order_prime_power(const GrPoly& F, const GrPoly& G, const Int& base_order, int t);

// lcm of the primary-factor orders of M; requires gcd(F, M) = 1.
Int order_composite(const GrPoly& F, const GrPoly& M, uint64_t seed = kDefaultSeed);

// One precision step of the cycle-length-factor tracking: true iff the order
// of the class watched by `witness` grows by a factor p at precision eps.
// witness must have coefficients in [0, p); prev_order is the order at eps-1.
bool omega_step(const GrPoly& f, const GrPoly& m, const GrPoly& witness, const Int& prev_order,
                int eps);

}  // namespace lfds
