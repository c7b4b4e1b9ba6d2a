#pragma once

#include <vector>

#include "lfds/bigint.hpp"
#include "lfds/poly.hpp"

namespace lfds {

// Certificate x*a - y*b = 1 (mod p^eps); with additive = true the relation is
// x*a + y*b = 1 instead. All four polynomials share one precision.
struct BezoutCert {
    GrPoly a, b, x, y;
    bool additive = false;

    int precision() const { return a.precision(); }
    bool valid() const;
};

// Seeds a certificate over the residue field via the extended Euclidean
// algorithm; a and b must be coprime mod p.
BezoutCert make_bezout_field(const GrPoly& a, const GrPoly& b);

// One precision step eps -> eps+1. The two-argument form reinterprets the
// certificate's own a, b at the higher precision; the four-argument form takes
// the higher-precision operands explicitly (they must project back onto the
// certificate's).
BezoutCert lift_bezout(const BezoutCert& cert);
BezoutCert lift_bezout(const BezoutCert& cert, const GrPoly& a_next, const GrPoly& b_next);

struct HenselPair {
    GrPoly g, h, s, t;
};

// Two-factor Hensel lifting: from f = g*h and s*g + t*h = 1 (mod p), with h
// monic and the usual degree constraints, to the same system mod p^target.
HenselPair hensel_pair(const GrPoly& f, const GrPoly& g, const GrPoly& h, const GrPoly& s,
                       const GrPoly& t, int target);

// Lifts a pairwise-coprime monic factorization of m mod p to mod p^target by
// recursive binary splitting over hensel_pair.
std::vector<GrPoly> hensel_multi(const GrPoly& m, const std::vector<GrPoly>& field_factors,
                                 int target);

// Certified f-decomposition at a precision: m1*m2 = m, alpha*f + beta*m1 = 1,
// f^N = 0 (mod m2), all mod p^precision.
struct FDecomposition {
    int precision;
    GrPoly m1, m2;
    BezoutCert bezout;          // additive certificate for (f, m1)
    Int nilpotent_exponent;     // N = deg(M2) * p^(precision-1)

    // Re-checks every invariant against the system (f, m).
    bool verify(const GrPoly& f, const GrPoly& m) const;
};

// Lifts the field-level f-decomposition (M1, M2) of m to the target precision.
// Requires gcd(f mod p, M1) = 1 and (f mod p)^(deg M2) = 0 mod M2.
FDecomposition lift_f_decomposition(const GrPoly& f, const GrPoly& m, const GrPoly& M1,
                                    const GrPoly& M2, int target);

}  // namespace lfds
