#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lfds/bigint.hpp"
#include "lfds/factor.hpp"
#include "lfds/poly.hpp"

namespace lfds {

struct HeightReport {
    int64_t field_height;  // tau, height of the residue-field system
    int64_t bound;         // e * tau
    int64_t height;        // system height, tau <= height <= bound
    int probe_count;       // congruence tests performed
};

// Field-level transient height: max over irreducible G | F of
// ceil(mult_G(M2) / mult_G(F)); 0 when M2 = 1. f_factorization is factor(F).
int64_t height_field(const GrPoly& F, const GrPoly& M2,
                     const std::vector<std::pair<GrPoly, int>>& f_factorization);

// System height at precision e via binary search for the least h with
// f^(h+l_max) = f^h (mod m, p^e); l_max is max(C(Gamma_e(f, m))).
HeightReport height_ring(const GrPoly& f, const GrPoly& m, int e, const Int& l_max,
                         uint64_t seed = kDefaultSeed);

// (preperiod, period) of the orbit of 1 under g -> f*g (mod m, p^eps), by
// Brent cycle detection; throws resource_error past step_limit applications.
std::pair<uint64_t, uint64_t> per_pper_of_one(const GrPoly& f, const GrPoly& m, int eps,
                                              uint64_t step_limit = 1u << 22);

}  // namespace lfds
