#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lfds/bigint.hpp"
#include "lfds/factor.hpp"
#include "lfds/poly.hpp"

namespace lfds {

// Ring-level split of the system (f, m) into nilpotent and bijective parts,
// with the bijective modulus factored into lifted primary blocks.
struct SystemSplit {
    int precision;
    GrPoly m2;                            // nilpotent modulus (1 when absent)
    GrPoly m1;                            // bijective modulus, product of the blocks
    std::vector<GrPoly> bijective_factors;  // lifted g_i, pi_1(g_i) = G_i^{k_i}
    std::vector<std::pair<GrPoly, int>> field_data;  // (G_i, k_i)
};

// Field-level f-decomposition M = M1*M2: M1 the greatest monic divisor of M
// coprime with F, every irreducible divisor of M2 divides F.
std::pair<GrPoly, GrPoly> f_decompose_field(const GrPoly& F, const GrPoly& M,
                                            uint64_t seed = kDefaultSeed);

SystemSplit split_system(const GrPoly& f, const GrPoly& m, int eps,
                         uint64_t seed = kDefaultSeed);

// One class of primary factors whose irreducible bases share a base order.
struct ThetaGroup {
    int index;
    std::vector<GrPoly> members;  // the irreducible G'
    GrPoly theta_field;           // prod G'^k at precision 1
    GrPoly theta_lifted;          // lift at the split's precision
    Int base_order;
};

// Partition of the bijective factors by exact base order O(F, G_i'); the
// orders argument is aligned with split.field_data.
std::vector<ThetaGroup> theta_grouping(const SystemSplit& split, const std::vector<Int>& orders);

}  // namespace lfds
