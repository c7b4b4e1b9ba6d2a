#pragma once

#include <cstdint>
#include <vector>

#include "lfds/bigint.hpp"
#include "lfds/poly.hpp"

// Field-level data shared by the cycle-set, height and report code: the
// f-decomposition of m mod p plus per-factor order ladders.

namespace lfds::detail {

struct FactorOrderData {
    GrPoly G;  // irreducible divisor of M1
    int k;     // multiplicity
    Int base_order;
    int saturation;
    Int marked_order;         // O(F, G^k)
    std::vector<Int> ladder;  // O(F, G^t) for t = 1..k
};

struct FieldPipeline {
    GrPoly F, M;    // f, m mod p
    GrPoly M1, M2;  // f-decomposition of M
    std::vector<FactorOrderData> factors;
};

FieldPipeline field_pipeline(const GrPoly& f, const GrPoly& m, uint64_t seed);

}  // namespace lfds::detail
