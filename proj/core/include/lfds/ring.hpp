#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lfds/bigint.hpp"

namespace lfds {

class RingSpec;
using RingSpecPtr = std::shared_ptr<const RingSpec>;

// Parameters of the tower Z_{p^eps}[t]/<h> for all precisions 1 <= eps <= e.
// p must be prime, p^e must fit in 63 bits, and h must be monic of degree d
// and irreducible mod p. For d = 1 the modulus is h = t and every element
// carries a single coefficient.
class RingSpec {
  public:
    int64_t p() const { return p_; }
    int d() const { return d_; }
    int e() const { return e_; }

    // h as d+1 coefficients in [0, p), lowest first, h[d] = 1.
    const std::vector<int64_t>& h() const { return h_; }

    // p^eps for 0 <= eps <= e.
    int64_t char_pow(int eps) const { return p_pow_[static_cast<size_t>(eps)]; }

    // q = p^d, the residue field size.
    const Int& q() const { return q_; }

    bool same_tower(const RingSpec& other) const {
        return p_ == other.p_ && d_ == other.d_ && e_ == other.e_ && h_ == other.h_;
    }

  private:
    friend RingSpecPtr make_ring_spec(int64_t, int, int, std::vector<int64_t>);
    RingSpec() = default;

    int64_t p_ = 0;
    int d_ = 0;
    int e_ = 0;
    std::vector<int64_t> h_;
    std::vector<int64_t> p_pow_;
    Int q_;
};

// Validates all RingSpec invariants (primality of p, range of p^e, monicity
// and irreducibility of h). Pass an empty h for d = 1.
RingSpecPtr make_ring_spec(int64_t p, int d, int e, std::vector<int64_t> h = {});

// An element of GR(p^eps, d): d coefficients in [0, p^eps), trailing zeros kept.
class GrElem {
  public:
    GrElem(RingSpecPtr spec, int eps, std::vector<int64_t> coords);

    static GrElem zero(RingSpecPtr spec, int eps);
    static GrElem one(RingSpecPtr spec, int eps);
    // v reduced into [0, p^eps); negative v allowed.
    static GrElem from_int(RingSpecPtr spec, int eps, int64_t v);

    const RingSpecPtr& spec() const { return spec_; }
    int precision() const { return eps_; }
    const std::vector<int64_t>& coords() const { return c_; }

    bool is_zero() const;
    // True iff the reduction mod p is nonzero.
    bool is_unit() const;

    // Multiplicative inverse: field inverse mod p, then Newton lifting
    // x <- x(2 - ax) up to the element's precision. Requires is_unit().
    GrElem inv() const;

    GrElem pow(const Int& k) const;

    // Coefficient-wise reduction mod p^eps2, 1 <= eps2 <= precision().
    GrElem project(int eps2) const;

    GrElem operator-() const;
    friend GrElem operator+(const GrElem& a, const GrElem& b);
    friend GrElem operator-(const GrElem& a, const GrElem& b);
    friend GrElem operator*(const GrElem& a, const GrElem& b);
    friend bool operator==(const GrElem& a, const GrElem& b);
    friend bool operator!=(const GrElem& a, const GrElem& b) { return !(a == b); }

  private:
    RingSpecPtr spec_;
    int eps_;
    std::vector<int64_t> c_;
};

// Throws std::invalid_argument unless both elements live in the same tower at
// the same precision.
void require_compatible(const GrElem& a, const GrElem& b);

}  // namespace lfds
