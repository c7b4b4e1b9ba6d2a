#pragma once

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "lfds/bigint.hpp"
#include "lfds/ring.hpp"

namespace lfds {

enum class RegularityClass { zero_divisor, regular_non_unit, unit };

// Dense univariate polynomial over GR(p^eps, d), lowest degree first, no
// trailing zero coefficient (the zero polynomial stores nothing). Coefficients
// are kept flat (d machine words each) so the arithmetic kernels stay
// cache-friendly at large degree.
class GrPoly {
  public:
    GrPoly(RingSpecPtr spec, int eps);  // zero polynomial

    static GrPoly zero(RingSpecPtr spec, int eps) { return GrPoly(std::move(spec), eps); }
    static GrPoly one(RingSpecPtr spec, int eps);
    static GrPoly x_pow(RingSpecPtr spec, int eps, int k);  // x^k
    static GrPoly from_elems(const std::vector<GrElem>& coeffs);
    // One integer per x-coefficient (t-constant), reduced mod p^eps.
    static GrPoly from_ints(RingSpecPtr spec, int eps, const std::vector<int64_t>& coeffs);
    static GrPoly constant(const GrElem& c);
    // Raw coordinate vector of size n_terms*d, values already in [0, p^eps).
    static GrPoly from_raw(RingSpecPtr spec, int eps, std::vector<int64_t> flat);

    const RingSpecPtr& spec() const { return spec_; }
    int precision() const { return eps_; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(n_terms()) - 1; }  // -1 for zero
    size_t n_terms() const { return c_.size() / static_cast<size_t>(spec_->d()); }

    GrElem coeff(int i) const;  // zero beyond the degree
    GrElem leading() const;     // requires nonzero
    bool is_monic() const;

    GrPoly project(int eps2) const;
    // Same coordinates read at a higher precision; every coordinate must
    // already be < p^eps2.
    GrPoly lift_reinterpret(int eps2) const;
    // Coefficient-wise canonical representative with coordinates in [0, p).
    GrPoly canonical_lift(int eps2) const;

    GrPoly operator-() const;
    friend GrPoly operator+(const GrPoly& a, const GrPoly& b);
    friend GrPoly operator-(const GrPoly& a, const GrPoly& b);
    friend GrPoly operator*(const GrPoly& a, const GrPoly& b);
    friend GrPoly operator*(const GrElem& s, const GrPoly& a);
    friend bool operator==(const GrPoly& a, const GrPoly& b);
    friend bool operator!=(const GrPoly& a, const GrPoly& b) { return !(a == b); }

    const std::vector<int64_t>& raw() const { return c_; }

  private:
    void trim();

    RingSpecPtr spec_;
    int eps_;
    std::vector<int64_t> c_;
};

// Division with remainder: a = q*b + r, deg r < deg b. b must be nonzero with
// a unit leading coefficient (monic divisors are the common case; unit-leading
// b is normalized internally).
std::pair<GrPoly, GrPoly> poly_divmod(const GrPoly& a, const GrPoly& b);
GrPoly poly_quot(const GrPoly& a, const GrPoly& b);
GrPoly poly_rem(const GrPoly& a, const GrPoly& b);

// f^k mod m for k >= 0 of arbitrary size; m must have degree >= 1 and a unit
// leading coefficient.
GrPoly mod_pow(const GrPoly& f, const Int& k, const GrPoly& m);

// Small non-modular power (degree grows as k*deg f).
GrPoly poly_pow(const GrPoly& f, int k);

// Zero divisor / regular / unit classification by the coefficient criterion.
RegularityClass classify(const GrPoly& f);

// Extended gcd over the residue field (precision must be 1): returns monic
// g = gcd(a, b) and u, v with u*a + v*b = g.
std::tuple<GrPoly, GrPoly, GrPoly> field_gcd_ext(const GrPoly& a, const GrPoly& b);
GrPoly field_gcd(const GrPoly& a, const GrPoly& b);

GrPoly derivative(const GrPoly& f);

}  // namespace lfds
