#include "lfds/hensel.hpp"

#include <stdexcept>

namespace lfds {

namespace {

GrPoly one_at(const GrPoly& like, int eps) { return GrPoly::one(like.spec(), eps); }

// Smallest-p threshold below which the power-form lifting lemma is used
// verbatim; beyond it the multiplicative correction (1 - r) is cheaper than
// expanding p binomial terms.
constexpr int64_t kLemmaFormulaMaxP = 64;

BezoutCert lift_step(const BezoutCert& cert, const GrPoly& a2, const GrPoly& b2) {
    const int eps2 = cert.precision() + 1;
    const auto& spec = a2.spec();
    if (a2.precision() != eps2 || b2.precision() != eps2)
        throw std::invalid_argument("lift_bezout: operands must be one precision above the certificate");
    if (a2.project(cert.precision()) != cert.a || b2.project(cert.precision()) != cert.b)
        throw std::invalid_argument("lift_bezout: operands do not project onto the certificate");
    if (!cert.valid()) throw std::domain_error("lift_bezout: input certificate is invalid");

    GrPoly x = cert.x.lift_reinterpret(eps2);
    GrPoly y = cert.y.lift_reinterpret(eps2);
    // Internally subtractive: x*a - y_sub*b = 1.
    GrPoly y_sub = cert.additive ? -y : y;
    const int64_t p = spec->p();

    GrPoly x2(spec, eps2), y2(spec, eps2);
    if (p <= kLemmaFormulaMaxP) {
        // x' = x * (x a)^{p-1}; y' recovers (y b + 1)^p = y' b + 1.
        GrPoly xa = x * a2;
        GrPoly xp = one_at(a2, eps2);
        for (int64_t i = 0; i + 1 < p; ++i) xp = xp * xa;
        x2 = x * xp;
        // y' = sum_{k=1..p} C(p,k) y^k b^{k-1}
        const int64_t pe = spec->char_pow(eps2);
        Int binom = 1;
        GrPoly ypow = one_at(a2, eps2);
        GrPoly bpow = one_at(a2, eps2);
        y2 = GrPoly::zero(spec, eps2);
        for (int64_t k = 1; k <= p; ++k) {
            binom = binom * (p - k + 1) / k;
            ypow = ypow * y_sub;
            if (k > 1) bpow = bpow * b2;
            int64_t bin_red = static_cast<int64_t>(binom % pe);
            y2 = y2 + GrElem::from_int(spec, eps2, bin_red) * (ypow * bpow);
        }
    } else {
        GrPoly r = x * a2 - y_sub * b2 - one_at(a2, eps2);
        x2 = x - x * r;
        y2 = y_sub - y_sub * r;
    }

    BezoutCert out{a2, b2, std::move(x2), cert.additive ? -y2 : std::move(y2), cert.additive};
    if (!out.valid()) throw std::domain_error("lift_bezout: lifted certificate failed verification");
    return out;
}

// Degree control against a monic b: x <- x mod b, y recomputed by exact
// division. Only valid for additive certificates with monic b.
BezoutCert normalize_against_monic(BezoutCert cert) {
    if (!cert.b.is_monic() || cert.b.degree() < 1) return cert;
    cert.x = poly_rem(cert.x, cert.b);
    GrPoly rest = one_at(cert.a, cert.precision()) - cert.x * cert.a;
    if (!cert.additive) rest = -rest;
    auto [q, r] = poly_divmod(rest, cert.b);
    if (!r.is_zero()) throw std::domain_error("bezout normalization: relation is not exact");
    cert.y = std::move(q);
    return cert;
}

}  // namespace

bool BezoutCert::valid() const {
    GrPoly lhs = additive ? x * a + y * b : x * a - y * b;
    return lhs == one_at(a, a.precision());
}

BezoutCert make_bezout_field(const GrPoly& a, const GrPoly& b) {
    auto [g, u, v] = field_gcd_ext(a, b);
    if (g.degree() != 0)
        throw std::domain_error("make_bezout_field: inputs are not coprime mod p");
    // g is monic, hence exactly 1.
    return BezoutCert{a, b, u, v, true};
}

BezoutCert lift_bezout(const BezoutCert& cert) {
    const int eps2 = cert.precision() + 1;
    return lift_step(cert, cert.a.lift_reinterpret(eps2), cert.b.lift_reinterpret(eps2));
}

BezoutCert lift_bezout(const BezoutCert& cert, const GrPoly& a_next, const GrPoly& b_next) {
    return lift_step(cert, a_next, b_next);
}

HenselPair hensel_pair(const GrPoly& f, const GrPoly& g, const GrPoly& h, const GrPoly& s,
                       const GrPoly& t, int target) {
    const auto& spec = f.spec();
    if (target < 1 || target > spec->e())
        throw std::invalid_argument("hensel_pair: target precision out of range");
    if (!h.is_monic()) throw std::domain_error("hensel_pair: h must be monic");
    if (g.precision() != 1 || h.precision() != 1 || s.precision() != 1 || t.precision() != 1)
        throw std::invalid_argument("hensel_pair: g, h, s, t must be given at precision 1");
    if (f.precision() < target)
        throw std::invalid_argument("hensel_pair: f must carry at least the target precision");
    const GrPoly f1 = f.project(1);
    if (f1.is_zero() || !f1.leading().is_unit())
        throw std::domain_error("hensel_pair: leading coefficient of f is a zero divisor mod p");
    if (f1 != g * h) throw std::domain_error("hensel_pair: f != g*h mod p");
    if (s * g + t * h != one_at(g, 1)) throw std::domain_error("hensel_pair: s*g + t*h != 1 mod p");
    if (f.degree() != g.degree() + h.degree())
        throw std::domain_error("hensel_pair: deg f must equal deg g + deg h");
    if (s.degree() >= h.degree() || (g.degree() >= 1 && t.degree() >= g.degree()))
        throw std::domain_error("hensel_pair: certificate degree constraints violated");

    GrPoly G = g, H = h, S = s, T = t;
    for (int eps = 2; eps <= target; ++eps) {
        const GrPoly fe = f.project(eps);
        GrPoly Gl = G.lift_reinterpret(eps);
        GrPoly Hl = H.lift_reinterpret(eps);
        GrPoly Sl = S.lift_reinterpret(eps);
        GrPoly Tl = T.lift_reinterpret(eps);

        GrPoly err = fe - Gl * Hl;
        auto [q, r] = poly_divmod(Sl * err, Hl);
        GrPoly H2 = Hl + r;
        auto [G2, rr] = poly_divmod(fe, H2);
        if (!rr.is_zero()) throw std::domain_error("hensel_pair: factor update is not exact");

        GrPoly berr = Sl * G2 + Tl * H2 - one_at(Gl, eps);
        GrPoly dd = poly_rem(Sl * berr, H2);
        GrPoly S2 = Sl - dd;
        auto [T2, tr] = poly_divmod(one_at(Gl, eps) - S2 * G2, H2);
        if (!tr.is_zero()) throw std::domain_error("hensel_pair: certificate update is not exact");

        G = std::move(G2);
        H = std::move(H2);
        S = std::move(S2);
        T = std::move(T2);
    }
    return {std::move(G), std::move(H), std::move(S), std::move(T)};
}

namespace {

std::vector<GrPoly> hensel_multi_rec(const GrPoly& m, const std::vector<GrPoly>& facs, int target) {
    if (facs.size() == 1) {
        if (m.project(1) != facs[0])
            throw std::domain_error("hensel_multi: lifted factor does not reduce to its field factor");
        return {m};
    }
    const size_t mid = facs.size() / 2;
    GrPoly gl = GrPoly::one(m.spec(), 1), gr = GrPoly::one(m.spec(), 1);
    for (size_t i = 0; i < mid; ++i) gl = gl * facs[i];
    for (size_t i = mid; i < facs.size(); ++i) gr = gr * facs[i];
    auto [g, u, v] = field_gcd_ext(gl, gr);
    if (g.degree() != 0) throw std::domain_error("hensel_multi: factors are not pairwise coprime");
    auto lifted = hensel_pair(m, gl, gr, u, v, target);

    std::vector<GrPoly> left(facs.begin(), facs.begin() + static_cast<ptrdiff_t>(mid));
    std::vector<GrPoly> right(facs.begin() + static_cast<ptrdiff_t>(mid), facs.end());
    auto out = hensel_multi_rec(lifted.g, left, target);
    auto out_r = hensel_multi_rec(lifted.h, right, target);
    out.insert(out.end(), out_r.begin(), out_r.end());
    return out;
}

}  // namespace

std::vector<GrPoly> hensel_multi(const GrPoly& m, const std::vector<GrPoly>& field_factors,
                                 int target) {
    if (field_factors.empty()) throw std::invalid_argument("hensel_multi: empty factor list");
    if (!m.is_monic()) throw std::domain_error("hensel_multi: m must be monic");
    GrPoly prod = GrPoly::one(m.spec(), 1);
    for (const auto& g : field_factors) {
        if (!g.is_monic()) throw std::domain_error("hensel_multi: factors must be monic");
        prod = prod * g;
    }
    if (prod != m.project(1))
        throw std::domain_error("hensel_multi: factor product does not equal m mod p");
    if (target == 1) return field_factors;
    return hensel_multi_rec(m.precision() == target ? m : m.project(target), field_factors, target);
}

FDecomposition lift_f_decomposition(const GrPoly& f, const GrPoly& m, const GrPoly& M1,
                                    const GrPoly& M2, int target) {
    const auto& spec = f.spec();
    if (target < 1 || target > spec->e())
        throw std::invalid_argument("lift_f_decomposition: target precision out of range");
    const GrPoly F = f.project(1);
    if (F.is_zero()) throw std::domain_error("lift_f_decomposition: f vanishes mod p");
    if (M1 * M2 != m.project(1))
        throw std::domain_error("lift_f_decomposition: M1*M2 != m mod p");
    if (M1.degree() > 0 && field_gcd(F, M1).degree() != 0)
        throw std::domain_error("lift_f_decomposition: gcd(f, M1) != 1 mod p");
    if (M2.degree() > 0 && !mod_pow(F, Int(M2.degree()), M2).is_zero())
        throw std::domain_error("lift_f_decomposition: rad(M2) does not divide f mod p");

    const GrPoly one1 = GrPoly::one(spec, 1);
    GrPoly m1(spec, target), m2(spec, target);
    if (M1.degree() < 1) {
        m1 = GrPoly::one(spec, target);
        m2 = m.project(target);
    } else if (M2.degree() < 1) {
        m1 = m.project(target);
        m2 = GrPoly::one(spec, target);
    } else {
        auto [g, u, v] = field_gcd_ext(M1, M2);
        if (g.degree() != 0) throw std::domain_error("lift_f_decomposition: M1, M2 not coprime");
        auto pair = hensel_pair(m, M1, M2, u, v, target);
        m1 = std::move(pair.g);
        m2 = std::move(pair.h);
    }

    BezoutCert cert = M1.degree() < 1
                          ? BezoutCert{F, one1, GrPoly::zero(spec, 1), one1, true}
                          : make_bezout_field(F, M1);
    for (int eps = 2; eps <= target; ++eps) {
        cert = lift_bezout(cert, f.project(eps), m1.project(eps));
        cert = normalize_against_monic(std::move(cert));
    }

    Int n_exp = M2.degree() < 1
                    ? Int(1)
                    : Int(M2.degree()) * int_pow(Int(spec->p()), static_cast<uint64_t>(target - 1));
    FDecomposition out{target, std::move(m1), std::move(m2), std::move(cert), std::move(n_exp)};
    if (!out.verify(f, m))
        throw std::domain_error("lift_f_decomposition: lifted decomposition failed verification");
    return out;
}

bool FDecomposition::verify(const GrPoly& f, const GrPoly& m) const {
    const GrPoly fe = f.project(precision);
    if (m1 * m2 != m.project(precision)) return false;
    if (!bezout.valid()) return false;
    if (bezout.a != fe.project(bezout.precision())) return false;
    if (m2.degree() >= 1 && !mod_pow(fe, nilpotent_exponent, m2).is_zero()) return false;
    return true;
}

}  // namespace lfds
