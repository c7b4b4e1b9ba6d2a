#include "lfds/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "lfds/intfactor.hpp"
#include "gf2x.hpp"

namespace lfds {

namespace {

bool coeff_lex_less(const GrPoly& a, const GrPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.raw() < b.raw();
}

void sort_canonical(std::vector<std::pair<GrPoly, int>>& factors) {
    std::sort(factors.begin(), factors.end(),
              [](const auto& x, const auto& y) { return coeff_lex_less(x.first, y.first); });
}

GrPoly random_poly(const RingSpecPtr& spec, std::mt19937_64& rng, int max_deg) {
    const int64_t p = spec->p();
    const size_t d = static_cast<size_t>(spec->d());
    std::vector<int64_t> flat((static_cast<size_t>(max_deg) + 1) * d);
    for (auto& v : flat) v = static_cast<int64_t>(rng() % static_cast<uint64_t>(p));
    return GrPoly::from_raw(spec, 1, std::move(flat));
}

// a -> a^(1/p) in F_q via a^(p^(d-1)).
GrElem pth_root(const GrElem& a) {
    const auto& spec = a.spec();
    if (spec->d() == 1) return a;
    return a.pow(int_pow(Int(spec->p()), static_cast<uint64_t>(spec->d() - 1)));
}

// F(x) with F' = 0 equals V(x^p); recover V with p-th roots of coefficients.
GrPoly unfrobenius(const GrPoly& F) {
    const int64_t p = F.spec()->p();
    std::vector<GrElem> coeffs;
    for (int i = 0; i * p <= F.degree(); ++i) coeffs.push_back(pth_root(F.coeff(i * static_cast<int>(p))));
    return GrPoly::from_elems(coeffs);
}

// (product of distinct irreducibles, multiplicity) parts of a monic F.
void squarefree_parts(const GrPoly& F, int outer, std::vector<std::pair<GrPoly, int>>& out) {
    const int64_t p = F.spec()->p();
    GrPoly fd = derivative(F);
    if (fd.is_zero()) {
        squarefree_parts(unfrobenius(F), outer * static_cast<int>(p), out);
        return;
    }
    GrPoly c = field_gcd(F, fd);
    GrPoly w = poly_quot(F, c);
    int i = 1;
    while (w.degree() > 0) {
        GrPoly y = field_gcd(w, c);
        GrPoly z = poly_quot(w, y);
        if (z.degree() > 0) out.emplace_back(std::move(z), i * outer);
        c = poly_quot(c, y);
        w = std::move(y);
        ++i;
    }
    if (c.degree() > 0) squarefree_parts(unfrobenius(c), outer * static_cast<int>(p), out);
}

// Equal-degree splitting of a product of irreducibles of degree k.
void edf(const GrPoly& prod, int k, std::mt19937_64& rng, std::vector<GrPoly>& out) {
    if (prod.degree() == k) {
        out.push_back(prod);
        return;
    }
    const auto& spec = prod.spec();
    while (true) {
        GrPoly w = random_poly(spec, rng, prod.degree() - 1);
        if (w.degree() < 1) continue;
        GrPoly g = field_gcd(w, prod);
        if (g.degree() == 0) {
            if (spec->p() == 2) {
                // Trace to F_2: w + w^2 + ... + w^(2^(dk-1)).
                const int bits = spec->d() * k;
                GrPoly tr = w, acc = w;
                for (int i = 1; i < bits; ++i) {
                    acc = mod_pow(acc, Int(2), prod);
                    tr = tr + acc;
                }
                g = field_gcd(tr, prod);
            } else {
                Int half = (int_pow(spec->q(), static_cast<uint64_t>(k)) - 1) / 2;
                GrPoly t = mod_pow(w, half, prod);
                g = field_gcd(t - GrPoly::one(spec, 1), prod);
            }
        }
        if (g.degree() > 0 && g.degree() < prod.degree()) {
            edf(g, k, rng, out);
            edf(poly_quot(prod, g), k, rng, out);
            return;
        }
    }
}

void ddf(GrPoly f, std::mt19937_64& rng, int mult, std::vector<std::pair<GrPoly, int>>& out) {
    const auto& spec = f.spec();
    const GrPoly x1 = GrPoly::x_pow(spec, 1, 1);
    GrPoly h = poly_rem(x1, f);
    for (int k = 1; 2 * k <= f.degree(); ++k) {
        h = mod_pow(h, spec->q(), f);
        GrPoly g = field_gcd(h - x1, f);
        if (g.degree() > 0) {
            std::vector<GrPoly> irr;
            edf(g, k, rng, irr);
            for (auto& gi : irr) out.emplace_back(std::move(gi), mult);
            f = poly_quot(f, g);
            h = poly_rem(h, f);
        }
    }
    if (f.degree() > 0) out.emplace_back(std::move(f), mult);
}

GrPoly poly_from_f2(const RingSpecPtr& spec, const gf2x::F2Poly& a) {
    return GrPoly::from_ints(spec, 1, gf2x::to_bits(a));
}

}  // namespace

Factorization factor(const GrPoly& F, uint64_t seed) {
    if (F.precision() != 1) throw std::invalid_argument("factor: precision must be 1");
    if (F.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    const auto& spec = F.spec();

    GrElem unit = F.leading();
    Factorization result{unit, {}};
    if (F.degree() == 0) return result;
    GrPoly monic = unit.is_unit() && !F.is_monic() ? unit.inv() * F : F;

    if (spec->p() == 2 && spec->d() == 1) {
        auto packed = gf2x::factor(gf2x::from_bits(monic.raw()), seed);
        for (auto& [g, k] : packed) result.factors.emplace_back(poly_from_f2(spec, g), k);
    } else {
        std::mt19937_64 rng(seed);
        std::vector<std::pair<GrPoly, int>> parts;
        squarefree_parts(monic, 1, parts);
        for (auto& [part, mult] : parts) ddf(std::move(part), rng, mult, result.factors);
    }
    sort_canonical(result.factors);
    return result;
}

bool is_irreducible(const GrPoly& G) {
    if (G.precision() != 1) throw std::invalid_argument("is_irreducible: precision must be 1");
    const int n = G.degree();
    if (n < 1) throw std::invalid_argument("is_irreducible: degree must be >= 1");
    if (n == 1) return true;
    const auto& spec = G.spec();
    if (spec->p() == 2 && spec->d() == 1) return gf2x::irreducible(gf2x::from_bits(G.raw()));

    GrPoly g = G.is_monic() ? G : G.leading().inv() * G;
    const GrPoly x1 = poly_rem(GrPoly::x_pow(spec, 1, 1), g);
    // x^(q^n) == x mod g, and gcd(x^(q^(n/r)) - x, g) = 1 for every prime r | n.
    GrPoly h = x1;
    std::vector<std::pair<int, GrPoly>> checkpoints;
    for (const auto& [r, mult] : int_factorize(static_cast<uint64_t>(n)))
        checkpoints.emplace_back(n / static_cast<int>(r), GrPoly::zero(spec, 1));
    for (int i = 1; i <= n; ++i) {
        h = mod_pow(h, spec->q(), g);
        for (auto& [at, store] : checkpoints)
            if (at == i) store = h;
    }
    if (h != x1) return false;
    for (auto& [at, store] : checkpoints) {
        if (field_gcd(store - x1, g).degree() != 0) return false;
    }
    return true;
}

std::pair<GrPoly, Factorization> squarefree_and_radical(const GrPoly& F, uint64_t seed) {
    if (F.is_zero() || !F.is_monic())
        throw std::invalid_argument("squarefree_and_radical: input must be monic and nonzero");
    Factorization fac = factor(F, seed);
    GrPoly radical = GrPoly::one(F.spec(), 1);
    for (const auto& [g, k] : fac.factors) radical = radical * g;
    return {std::move(radical), std::move(fac)};
}

}  // namespace lfds
