#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "lfds/bigint.hpp"
#include "lfds/factor.hpp"
#include "lfds/poly.hpp"

namespace lfds {

// Sorted set of cycle lengths; 1 is always present (the zero fixed point).
struct CycleSet {
    std::set<Int> lengths{Int(1)};

    bool contains(const Int& v) const { return lengths.count(v) != 0; }
    const Int& max() const { return *lengths.rbegin(); }
    bool operator==(const CycleSet& other) const { return lengths == other.lengths; }
};

// {lcm(x, y) : x in X, y in Y}
CycleSet lcm_product(const CycleSet& x, const CycleSet& y);

// Cycle lengths of the field-level system (precision 1).
CycleSet cycle_set_field(const GrPoly& f, const GrPoly& m, uint64_t seed = kDefaultSeed);

// Field-level cycle census: (length, cycle count) per length over all monic
// divisors of M1; counts sum against q^deg(M1) periodic states.
struct CycleCensusField {
    std::vector<std::pair<Int, Int>> entries;  // sorted by length
    Int periodic_states;                       // q^deg(M1)
};
CycleCensusField cycle_census_field(const GrPoly& f, const GrPoly& m,
                                    uint64_t seed = kDefaultSeed);

// C(Gamma_eps) for eps = 1..e, built iteratively factor by factor.
std::vector<CycleSet> cycle_set_ring(const GrPoly& f, const GrPoly& m, int e,
                                     uint64_t seed = kDefaultSeed);

// Same output, iterating over order-equivalence classes instead of factors.
std::vector<CycleSet> cycle_set_ring_grouped(const GrPoly& f, const GrPoly& m, int e,
                                             uint64_t seed = kDefaultSeed);

}  // namespace lfds
