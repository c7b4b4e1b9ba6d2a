#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Word-packed F_2[x] arithmetic and factorization. Only used internally as
// the fast path for p = 2, d = 1 field-level work; the generic code in
// factor.cpp handles every other (p, d).

namespace lfds::gf2x {

// Bit i of word w is the coefficient of x^(64w + i). No trailing zero words.
using F2Poly = std::vector<uint64_t>;

int deg(const F2Poly& a);  // -1 for zero
void trim(F2Poly& a);
F2Poly from_bits(const std::vector<int64_t>& coeffs);  // one int (0/1) per degree
std::vector<int64_t> to_bits(const F2Poly& a);

F2Poly x_pow(int k);
F2Poly add(const F2Poly& a, const F2Poly& b);
F2Poly mul(const F2Poly& a, const F2Poly& b);
F2Poly sqr(const F2Poly& a);
F2Poly rem(F2Poly a, const F2Poly& b);
std::pair<F2Poly, F2Poly> divmod(const F2Poly& a, const F2Poly& b);
F2Poly gcd(F2Poly a, F2Poly b);
F2Poly sqrmod(const F2Poly& a, const F2Poly& m);

bool irreducible(const F2Poly& g);

// Complete factorization into irreducibles with multiplicities; deterministic
// for a fixed seed.
std::vector<std::pair<F2Poly, int>> factor(const F2Poly& f, uint64_t seed);

}  // namespace lfds::gf2x
