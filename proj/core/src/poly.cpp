#include "lfds/poly.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "kernels.hpp"

namespace lfds {

namespace {

using detail::addmod;
using detail::el_is_unit;
using detail::el_is_zero;
using detail::mulmod;
using detail::submod;

constexpr size_t kKaratsubaMin = 64;

void require_compatible_poly(const GrPoly& a, const GrPoly& b, const char* op) {
    if (a.precision() != b.precision() ||
        (a.spec() != b.spec() && !a.spec()->same_tower(*b.spec())))
        throw std::invalid_argument(std::string(op) + ": spec or precision mismatch");
}

// Schoolbook product of flat term arrays into a wide (2d-1 per term)
// accumulator. na, nb count x-terms.
void mul_school(int d, int64_t pe, const int64_t* a, size_t na, const int64_t* b, size_t nb,
                int64_t* wide) {
    const int w = 2 * d - 1;
    if (d == 1) {
        for (size_t i = 0; i < na; ++i) {
            const int64_t ai = a[i];
            if (!ai) continue;
            for (size_t j = 0; j < nb; ++j) {
                if (!b[j]) continue;
                wide[i + j] = addmod(wide[i + j], mulmod(ai, b[j], pe), pe);
            }
        }
        return;
    }
    for (size_t i = 0; i < na; ++i) {
        const int64_t* ai = a + i * static_cast<size_t>(d);
        if (el_is_zero(d, ai)) continue;
        for (size_t j = 0; j < nb; ++j) {
            const int64_t* bj = b + j * static_cast<size_t>(d);
            if (el_is_zero(d, bj)) continue;
            detail::el_mul_acc_wide(d, pe, ai, bj, wide + (i + j) * static_cast<size_t>(w));
        }
    }
}

void wide_add_into(int64_t pe, const int64_t* src, size_t n, int64_t* dst) {
    for (size_t i = 0; i < n; ++i) dst[i] = addmod(dst[i], src[i], pe);
}

void wide_sub_into(int64_t pe, const int64_t* src, size_t n, int64_t* dst) {
    for (size_t i = 0; i < n; ++i) dst[i] = submod(dst[i], src[i], pe);
}

// Karatsuba over x-terms; t-coordinates stay unreduced (width 2d-1) until the
// caller reduces by h. wide must be zeroed, (na+nb-1)*w entries.
void mul_kara(int d, int64_t pe, const int64_t* a, size_t na, const int64_t* b, size_t nb,
              int64_t* wide) {
    if (na == 0 || nb == 0) return;
    if (std::min(na, nb) < kKaratsubaMin) {
        mul_school(d, pe, a, na, b, nb, wide);
        return;
    }
    const size_t w = static_cast<size_t>(2 * d - 1);
    const size_t dd = static_cast<size_t>(d);
    const size_t s = (std::max(na, nb) + 1) / 2;
    const size_t na_lo = std::min(na, s), na_hi = na - na_lo;
    const size_t nb_lo = std::min(nb, s), nb_hi = nb - nb_lo;

    // z0 = lo*lo sits at offset 0, z2 = hi*hi at offset 2s.
    mul_kara(d, pe, a, na_lo, b, nb_lo, wide);
    if (na_hi && nb_hi) mul_kara(d, pe, a + na_lo * dd, na_hi, b + nb_lo * dd, nb_hi, wide + 2 * s * w);

    const size_t nsa = std::max(na_lo, na_hi);
    const size_t nsb = std::max(nb_lo, nb_hi);
    std::vector<int64_t> sa(nsa * dd, 0), sb(nsb * dd, 0);
    std::memcpy(sa.data(), a, na_lo * dd * sizeof(int64_t));
    for (size_t i = 0; i < na_hi * dd; ++i) sa[i] = addmod(sa[i], a[na_lo * dd + i], pe);
    std::memcpy(sb.data(), b, nb_lo * dd * sizeof(int64_t));
    for (size_t i = 0; i < nb_hi * dd; ++i) sb[i] = addmod(sb[i], b[nb_lo * dd + i], pe);

    std::vector<int64_t> z1((nsa + nsb - 1) * w, 0);
    mul_kara(d, pe, sa.data(), nsa, sb.data(), nsb, z1.data());

    // z1 -= z0 + z2, then add at offset s. Entries past the true product
    // degree cancel to zero in the subtraction, so the add can be clamped.
    const size_t n0 = (na_lo + nb_lo - 1) * w;
    wide_sub_into(pe, wide, n0, z1.data());
    if (na_hi && nb_hi) {
        const size_t n2 = (na_hi + nb_hi - 1) * w;
        wide_sub_into(pe, wide + 2 * s * w, n2, z1.data());
    }
    const size_t room = (na + nb - 1) * w - s * w;
    wide_add_into(pe, z1.data(), std::min(z1.size(), room), wide + s * w);
}

}  // namespace

GrPoly::GrPoly(RingSpecPtr spec, int eps) : spec_(std::move(spec)), eps_(eps) {
    if (!spec_) throw std::invalid_argument("GrPoly: null spec");
    if (eps_ < 1 || eps_ > spec_->e()) throw std::invalid_argument("GrPoly: precision out of range");
}

void GrPoly::trim() {
    const size_t d = static_cast<size_t>(spec_->d());
    while (!c_.empty() && el_is_zero(spec_->d(), c_.data() + c_.size() - d)) c_.resize(c_.size() - d);
}

GrPoly GrPoly::one(RingSpecPtr spec, int eps) {
    GrPoly r(std::move(spec), eps);
    r.c_.assign(static_cast<size_t>(r.spec_->d()), 0);
    r.c_[0] = 1;
    return r;
}

GrPoly GrPoly::x_pow(RingSpecPtr spec, int eps, int k) {
    if (k < 0) throw std::invalid_argument("GrPoly::x_pow: negative exponent");
    GrPoly r(std::move(spec), eps);
    const size_t d = static_cast<size_t>(r.spec_->d());
    r.c_.assign(d * static_cast<size_t>(k + 1), 0);
    r.c_[d * static_cast<size_t>(k)] = 1;
    return r;
}

GrPoly GrPoly::from_elems(const std::vector<GrElem>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("GrPoly::from_elems: empty coefficient list");
    GrPoly r(coeffs.front().spec(), coeffs.front().precision());
    for (const auto& c : coeffs) {
        require_compatible(coeffs.front(), c);
        r.c_.insert(r.c_.end(), c.coords().begin(), c.coords().end());
    }
    r.trim();
    return r;
}

GrPoly GrPoly::from_ints(RingSpecPtr spec, int eps, const std::vector<int64_t>& coeffs) {
    GrPoly r(std::move(spec), eps);
    const size_t d = static_cast<size_t>(r.spec_->d());
    const int64_t pe = r.spec_->char_pow(eps);
    r.c_.assign(d * coeffs.size(), 0);
    for (size_t i = 0; i < coeffs.size(); ++i) r.c_[i * d] = detail::norm_int(coeffs[i], pe);
    r.trim();
    return r;
}

GrPoly GrPoly::constant(const GrElem& c) { return from_elems({c}); }

GrPoly GrPoly::from_raw(RingSpecPtr spec, int eps, std::vector<int64_t> flat) {
    GrPoly r(std::move(spec), eps);
    if (flat.size() % static_cast<size_t>(r.spec_->d()) != 0)
        throw std::invalid_argument("GrPoly::from_raw: size not a multiple of d");
    r.c_ = std::move(flat);
    r.trim();
    return r;
}

GrElem GrPoly::coeff(int i) const {
    const size_t d = static_cast<size_t>(spec_->d());
    if (i < 0) throw std::invalid_argument("GrPoly::coeff: negative index");
    if (static_cast<size_t>(i) >= n_terms()) return GrElem::zero(spec_, eps_);
    std::vector<int64_t> c(c_.begin() + static_cast<ptrdiff_t>(static_cast<size_t>(i) * d),
                           c_.begin() + static_cast<ptrdiff_t>((static_cast<size_t>(i) + 1) * d));
    return GrElem(spec_, eps_, std::move(c));
}

GrElem GrPoly::leading() const {
    if (is_zero()) throw std::invalid_argument("GrPoly::leading: zero polynomial");
    return coeff(degree());
}

bool GrPoly::is_monic() const {
    if (is_zero()) return false;
    const size_t d = static_cast<size_t>(spec_->d());
    const int64_t* lc = c_.data() + c_.size() - d;
    if (lc[0] != 1) return false;
    for (size_t i = 1; i < d; ++i)
        if (lc[i]) return false;
    return true;
}

GrPoly GrPoly::project(int eps2) const {
    if (eps2 < 1 || eps2 > eps_) throw std::invalid_argument("GrPoly::project: precision out of range");
    GrPoly r(spec_, eps2);
    r.c_ = c_;
    const int64_t pe = spec_->char_pow(eps2);
    for (auto& v : r.c_) v %= pe;
    r.trim();
    return r;
}

GrPoly GrPoly::lift_reinterpret(int eps2) const {
    if (eps2 < eps_ || eps2 > spec_->e())
        throw std::invalid_argument("GrPoly::lift_reinterpret: precision out of range");
    GrPoly r(spec_, eps2);
    r.c_ = c_;
    return r;
}

GrPoly GrPoly::canonical_lift(int eps2) const {
    GrPoly r(spec_, eps2);
    r.c_ = c_;
    const int64_t p = spec_->p();
    for (auto& v : r.c_) v %= p;
    r.trim();
    return r;
}

GrPoly GrPoly::operator-() const {
    GrPoly r(spec_, eps_);
    r.c_.resize(c_.size());
    const int64_t pe = spec_->char_pow(eps_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] ? pe - c_[i] : 0;
    return r;
}

GrPoly operator+(const GrPoly& a, const GrPoly& b) {
    require_compatible_poly(a, b, "poly add");
    const int64_t pe = a.spec_->char_pow(a.eps_);
    GrPoly r(a.spec_, a.eps_);
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = addmod(r.c_[i], b.c_[i], pe);
    r.trim();
    return r;
}

GrPoly operator-(const GrPoly& a, const GrPoly& b) {
    require_compatible_poly(a, b, "poly sub");
    const int64_t pe = a.spec_->char_pow(a.eps_);
    GrPoly r(a.spec_, a.eps_);
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = submod(r.c_[i], b.c_[i], pe);
    r.trim();
    return r;
}

GrPoly operator*(const GrPoly& a, const GrPoly& b) {
    require_compatible_poly(a, b, "poly mul");
    if (a.is_zero() || b.is_zero()) return GrPoly(a.spec_, a.eps_);
    const int d = a.spec_->d();
    const size_t w = static_cast<size_t>(2 * d - 1);
    const size_t na = a.n_terms(), nb = b.n_terms();
    const int64_t pe = a.spec_->char_pow(a.eps_);
    std::vector<int64_t> wide((na + nb - 1) * w, 0);
    mul_kara(d, pe, a.c_.data(), na, b.c_.data(), nb, wide.data());

    GrPoly r(a.spec_, a.eps_);
    if (d == 1) {
        r.c_ = std::move(wide);
    } else {
        r.c_.assign((na + nb - 1) * static_cast<size_t>(d), 0);
        for (size_t k = 0; k < na + nb - 1; ++k) {
            detail::el_reduce_h(*a.spec_, pe, wide.data() + k * w);
            std::memcpy(r.c_.data() + k * static_cast<size_t>(d), wide.data() + k * w,
                        static_cast<size_t>(d) * sizeof(int64_t));
        }
    }
    r.trim();
    return r;
}

GrPoly operator*(const GrElem& s, const GrPoly& a) {
    if (s.precision() != a.precision())
        throw std::invalid_argument("poly scalar mul: precision mismatch");
    if (s.is_zero() || a.is_zero()) return GrPoly(a.spec(), a.precision());
    const int d = a.spec()->d();
    const int64_t pe = a.spec()->char_pow(a.precision());
    std::vector<int64_t> out(a.raw().size());
    std::vector<int64_t> tmp(static_cast<size_t>(d));
    for (size_t k = 0; k < a.n_terms(); ++k) {
        detail::el_mul(*a.spec(), pe, s.coords().data(), a.raw().data() + k * static_cast<size_t>(d),
                       tmp.data());
        std::memcpy(out.data() + k * static_cast<size_t>(d), tmp.data(),
                    static_cast<size_t>(d) * sizeof(int64_t));
    }
    return GrPoly::from_raw(a.spec(), a.precision(), std::move(out));
}

bool operator==(const GrPoly& a, const GrPoly& b) {
    return a.eps_ == b.eps_ && a.c_ == b.c_ &&
           (a.spec_ == b.spec_ || a.spec_->same_tower(*b.spec_));
}

std::pair<GrPoly, GrPoly> poly_divmod(const GrPoly& a, const GrPoly& b) {
    require_compatible_poly(a, b, "poly divmod");
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    const GrElem lc = b.leading();
    if (!lc.is_unit())
        throw std::domain_error("poly_divmod: leading coefficient of divisor is not a unit");

    const bool monic = b.is_monic();
    GrElem u = monic ? GrElem::one(b.spec(), b.precision()) : lc.inv();
    GrPoly bn = monic ? b : u * b;

    const int d = a.spec()->d();
    const size_t dd = static_cast<size_t>(d);
    const int64_t pe = a.spec()->char_pow(a.precision());
    const int db = bn.degree();
    if (a.degree() < db) return {GrPoly(a.spec(), a.precision()), a};

    std::vector<int64_t> r = a.raw();
    const size_t nq = a.n_terms() - bn.n_terms() + 1;
    std::vector<int64_t> q(nq * dd, 0);
    std::vector<int64_t> prod(dd);
    const int64_t* bc = bn.raw().data();

    for (int k = a.degree(); k >= db; --k) {
        int64_t* rk = r.data() + static_cast<size_t>(k) * dd;
        if (el_is_zero(d, rk)) continue;
        std::memcpy(q.data() + static_cast<size_t>(k - db) * dd, rk, dd * sizeof(int64_t));
        // r -= rk * x^{k-db} * bn
        for (int j = 0; j < db; ++j) {
            const int64_t* bj = bc + static_cast<size_t>(j) * dd;
            if (el_is_zero(d, bj)) continue;
            detail::el_mul(*a.spec(), pe, rk, bj, prod.data());
            int64_t* dst = r.data() + static_cast<size_t>(k - db + j) * dd;
            for (int t = 0; t < d; ++t) dst[t] = submod(dst[t], prod[t], pe);
        }
        std::memset(rk, 0, dd * sizeof(int64_t));
    }
    r.resize(static_cast<size_t>(db) * dd);
    GrPoly qp = GrPoly::from_raw(a.spec(), a.precision(), std::move(q));
    if (!monic) qp = u * qp;
    return {std::move(qp), GrPoly::from_raw(a.spec(), a.precision(), std::move(r))};
}

GrPoly poly_quot(const GrPoly& a, const GrPoly& b) { return poly_divmod(a, b).first; }

GrPoly poly_rem(const GrPoly& a, const GrPoly& b) { return poly_divmod(a, b).second; }

GrPoly mod_pow(const GrPoly& f, const Int& k, const GrPoly& m) {
    if (k < 0) throw std::invalid_argument("mod_pow: negative exponent");
    if (m.degree() < 1) throw std::domain_error("mod_pow: modulus must have degree >= 1");
    GrPoly r = GrPoly::one(f.spec(), f.precision());
    if (k == 0) return r;
    GrPoly base = poly_rem(f, m);
    for (int i = static_cast<int>(boost::multiprecision::msb(k)); i >= 0; --i) {
        r = poly_rem(r * r, m);
        if (boost::multiprecision::bit_test(k, static_cast<unsigned>(i))) r = poly_rem(r * base, m);
    }
    return r;
}

GrPoly poly_pow(const GrPoly& f, int k) {
    if (k < 0) throw std::invalid_argument("poly_pow: negative exponent");
    GrPoly r = GrPoly::one(f.spec(), f.precision());
    GrPoly base = f;
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

RegularityClass classify(const GrPoly& f) {
    if (f.is_zero()) return RegularityClass::zero_divisor;
    const int d = f.spec()->d();
    const int64_t p = f.spec()->p();
    bool any_unit = false;
    bool higher_unit = false;
    for (size_t k = 0; k < f.n_terms(); ++k) {
        if (el_is_unit(d, p, f.raw().data() + k * static_cast<size_t>(d))) {
            any_unit = true;
            if (k > 0) higher_unit = true;
        }
    }
    if (!any_unit) return RegularityClass::zero_divisor;
    const bool const_unit = el_is_unit(d, p, f.raw().data());
    if (const_unit && !higher_unit) return RegularityClass::unit;
    return RegularityClass::regular_non_unit;
}

std::tuple<GrPoly, GrPoly, GrPoly> field_gcd_ext(const GrPoly& a, const GrPoly& b) {
    require_compatible_poly(a, b, "field_gcd_ext");
    if (a.precision() != 1) throw std::invalid_argument("field_gcd_ext: precision must be 1");
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("field_gcd_ext: both inputs are zero");

    GrPoly r0 = a, r1 = b;
    GrPoly s0 = GrPoly::one(a.spec(), 1), s1 = GrPoly::zero(a.spec(), 1);
    GrPoly t0 = GrPoly::zero(a.spec(), 1), t1 = GrPoly::one(a.spec(), 1);
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(r0, r1);
        GrPoly s2 = s0 - q * s1;
        GrPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    GrElem u = r0.leading().inv();
    return {u * r0, u * s0, u * t0};
}

GrPoly field_gcd(const GrPoly& a, const GrPoly& b) {
    require_compatible_poly(a, b, "field_gcd");
    if (a.precision() != 1) throw std::invalid_argument("field_gcd: precision must be 1");
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("field_gcd: both inputs are zero");
    GrPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        GrPoly r2 = poly_rem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.leading().inv() * r0;
}

GrPoly derivative(const GrPoly& f) {
    if (f.degree() < 1) return GrPoly(f.spec(), f.precision());
    const int d = f.spec()->d();
    const size_t dd = static_cast<size_t>(d);
    const int64_t pe = f.spec()->char_pow(f.precision());
    std::vector<int64_t> out((f.n_terms() - 1) * dd, 0);
    for (size_t k = 1; k < f.n_terms(); ++k) {
        const int64_t kk = static_cast<int64_t>(k % static_cast<uint64_t>(pe));
        if (!kk) continue;
        for (size_t t = 0; t < dd; ++t)
            out[(k - 1) * dd + t] = mulmod(f.raw()[k * dd + t], kk, pe);
    }
    return GrPoly::from_raw(f.spec(), f.precision(), std::move(out));
}

}  // namespace lfds
