#include "lfds/ring.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "lfds/factor.hpp"
#include "lfds/intfactor.hpp"
#include "lfds/poly.hpp"
#include "kernels.hpp"

namespace lfds {

namespace {

std::vector<int64_t> small_buffer(int n) { return std::vector<int64_t>(static_cast<size_t>(n), 0); }

}  // namespace

namespace detail {

void el_mul(const RingSpec& spec, int64_t pe, const int64_t* a, const int64_t* b, int64_t* out) {
    const int d = spec.d();
    if (d == 1) {
        out[0] = mulmod(a[0], b[0], pe);
        return;
    }
    int64_t stack[31];
    std::vector<int64_t> heap;
    int64_t* wide = stack;
    if (2 * d - 1 > 31) {
        heap.assign(static_cast<size_t>(2 * d - 1), 0);
        wide = heap.data();
    } else {
        for (int i = 0; i < 2 * d - 1; ++i) stack[i] = 0;
    }
    el_mul_acc_wide(d, pe, a, b, wide);
    el_reduce_h(spec, pe, wide);
    for (int i = 0; i < d; ++i) out[i] = wide[i];
}

}  // namespace detail

RingSpecPtr make_ring_spec(int64_t p, int d, int e, std::vector<int64_t> h) {
    if (p < 2 || !is_prime_u64(static_cast<uint64_t>(p)))
        throw std::invalid_argument("RingSpec: p must be a prime >= 2");
    if (d < 1) throw std::invalid_argument("RingSpec: extension degree d must be >= 1");
    if (e < 1) throw std::invalid_argument("RingSpec: maximum precision e must be >= 1");

    std::vector<int64_t> p_pow{1};
    for (int i = 0; i < e; ++i) {
        int64_t prev = p_pow.back();
        if (prev > std::numeric_limits<int64_t>::max() / p)
            throw std::invalid_argument("RingSpec: p^e must fit in 63 bits");
        p_pow.push_back(prev * p);
    }

    if (h.empty() && d == 1) h = {0, 1};
    if (static_cast<int>(h.size()) != d + 1 || h[static_cast<size_t>(d)] != 1)
        throw std::invalid_argument("RingSpec: h must be monic of degree exactly d");
    for (auto& c : h) {
        c %= p;
        if (c < 0) c += p;
    }
    h[static_cast<size_t>(d)] = 1;

    auto spec = std::shared_ptr<RingSpec>(new RingSpec());
    spec->p_ = p;
    spec->d_ = d;
    spec->e_ = e;
    spec->h_ = h;
    spec->p_pow_ = std::move(p_pow);
    spec->q_ = int_pow(Int(p), static_cast<uint64_t>(d));

    if (d > 1) {
        // h lives over F_p; check irreducibility in the base tower.
        auto base = make_ring_spec(p, 1, 1);
        std::vector<GrElem> coeffs;
        coeffs.reserve(h.size());
        for (int64_t c : h) coeffs.push_back(GrElem::from_int(base, 1, c));
        if (!is_irreducible(GrPoly::from_elems(coeffs)))
            throw std::invalid_argument("RingSpec: h is not irreducible mod p");
    }
    return spec;
}

GrElem::GrElem(RingSpecPtr spec, int eps, std::vector<int64_t> coords)
    : spec_(std::move(spec)), eps_(eps), c_(std::move(coords)) {
    if (!spec_) throw std::invalid_argument("GrElem: null spec");
    if (eps_ < 1 || eps_ > spec_->e()) throw std::invalid_argument("GrElem: precision out of range");
    if (static_cast<int>(c_.size()) != spec_->d())
        throw std::invalid_argument("GrElem: coordinate count must equal d");
    const int64_t pe = spec_->char_pow(eps_);
    for (auto& v : c_) v = detail::norm_int(v, pe);
}

GrElem GrElem::zero(RingSpecPtr spec, int eps) {
    int d = spec->d();
    return GrElem(std::move(spec), eps, small_buffer(d));
}

GrElem GrElem::one(RingSpecPtr spec, int eps) {
    auto c = small_buffer(spec->d());
    c[0] = 1;
    return GrElem(std::move(spec), eps, std::move(c));
}

GrElem GrElem::from_int(RingSpecPtr spec, int eps, int64_t v) {
    auto c = small_buffer(spec->d());
    c[0] = v;
    return GrElem(std::move(spec), eps, std::move(c));
}

bool GrElem::is_zero() const { return detail::el_is_zero(spec_->d(), c_.data()); }

bool GrElem::is_unit() const { return detail::el_is_unit(spec_->d(), spec_->p(), c_.data()); }

GrElem GrElem::project(int eps2) const {
    if (eps2 < 1 || eps2 > eps_) throw std::invalid_argument("GrElem::project: precision out of range");
    std::vector<int64_t> c = c_;
    const int64_t pe = spec_->char_pow(eps2);
    for (auto& v : c) v %= pe;
    return GrElem(spec_, eps2, std::move(c));
}

void require_compatible(const GrElem& a, const GrElem& b) {
    if (a.precision() != b.precision())
        throw std::invalid_argument("GrElem: precision mismatch");
    if (a.spec() != b.spec() && !a.spec()->same_tower(*b.spec()))
        throw std::invalid_argument("GrElem: ring spec mismatch");
}

GrElem GrElem::operator-() const {
    std::vector<int64_t> out(c_.size());
    detail::el_neg(spec_->d(), spec_->char_pow(eps_), c_.data(), out.data());
    return GrElem(spec_, eps_, std::move(out));
}

GrElem operator+(const GrElem& a, const GrElem& b) {
    require_compatible(a, b);
    std::vector<int64_t> out(a.c_.size());
    detail::el_add(a.spec_->d(), a.spec_->char_pow(a.eps_), a.c_.data(), b.c_.data(), out.data());
    return GrElem(a.spec_, a.eps_, std::move(out));
}

GrElem operator-(const GrElem& a, const GrElem& b) {
    require_compatible(a, b);
    std::vector<int64_t> out(a.c_.size());
    detail::el_sub(a.spec_->d(), a.spec_->char_pow(a.eps_), a.c_.data(), b.c_.data(), out.data());
    return GrElem(a.spec_, a.eps_, std::move(out));
}

GrElem operator*(const GrElem& a, const GrElem& b) {
    require_compatible(a, b);
    std::vector<int64_t> out(a.c_.size());
    detail::el_mul(*a.spec_, a.spec_->char_pow(a.eps_), a.c_.data(), b.c_.data(), out.data());
    return GrElem(a.spec_, a.eps_, std::move(out));
}

bool operator==(const GrElem& a, const GrElem& b) {
    return a.eps_ == b.eps_ && a.c_ == b.c_ &&
           (a.spec_ == b.spec_ || a.spec_->same_tower(*b.spec_));
}

GrElem GrElem::pow(const Int& k) const {
    if (k < 0) throw std::invalid_argument("GrElem::pow: negative exponent");
    GrElem r = GrElem::one(spec_, eps_);
    if (k == 0) return r;
    const auto bits = boost::multiprecision::msb(k);
    for (int i = static_cast<int>(bits); i >= 0; --i) {
        r = r * r;
        if (boost::multiprecision::bit_test(k, static_cast<unsigned>(i))) r = r * (*this);
    }
    return r;
}

GrElem GrElem::inv() const {
    if (!is_unit()) throw std::domain_error("GrElem::inv: element is not a unit");
    // Inverse in the residue field, then Newton iteration to full precision.
    GrElem x = project(1).pow(spec_->q() - 2);
    if (eps_ == 1) return x;
    GrElem a = *this;
    GrElem two = GrElem::from_int(spec_, eps_, 2);
    // Reinterpret the field inverse at working precision; coefficients < p.
    GrElem cur(spec_, eps_, x.coords());
    int prec = 1;
    while (prec < eps_) {
        cur = cur * (two - a * cur);
        prec *= 2;
    }
    return cur;
}

}  // namespace lfds
