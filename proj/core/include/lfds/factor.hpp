#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lfds/poly.hpp"
#include "lfds/ring.hpp"

namespace lfds {

inline constexpr uint64_t kDefaultSeed = 0xC0FFEE;

// unit * prod G_i^{k_i} equals the input; the G_i are monic, irreducible,
// pairwise distinct and sorted by (degree, coefficient lexicographic).
struct Factorization {
    GrElem unit;
    std::vector<std::pair<GrPoly, int>> factors;
};

// Complete factorization over F_q (precision must be 1, F nonzero).
// Deterministic for a fixed seed; equal-degree splitting is randomized
// Cantor-Zassenhaus, with the trace-polynomial variant in characteristic 2.
Factorization factor(const GrPoly& F, uint64_t seed = kDefaultSeed);

// Rabin/Ben-Or irreducibility test over F_q (precision 1, deg >= 1).
bool is_irreducible(const GrPoly& G);

// Radical (product of the distinct monic irreducible divisors) together with
// the per-factor exponents; derived from factor().
std::pair<GrPoly, Factorization> squarefree_and_radical(const GrPoly& F,
                                                        uint64_t seed = kDefaultSeed);

}  // namespace lfds
