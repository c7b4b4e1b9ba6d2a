#pragma once

#include <string>

#include "lfds/poly.hpp"

namespace lfds {

// Text format shared with the CLI: terms `c*x^k` joined by `+`/`-`, `x` alone
// means x^1, bare constants allowed. For d > 1 coefficients are bracketed
// polynomials in t, e.g. `[t+1]*x^2+[t]`. print followed by parse is the
// identity on canonical polynomials.
std::string print_poly(const GrPoly& f);
GrPoly parse_poly(const RingSpecPtr& spec, int eps, const std::string& text);

// Parses a polynomial in t over Z_p into d+1-style coefficient form (used for
// the tower modulus h). Coefficients reduced into [0, p).
std::vector<int64_t> parse_tpoly(int64_t p, const std::string& text);

}  // namespace lfds
