#pragma once

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "lfds/analyze.hpp"
#include "lfds/cycle_set.hpp"
#include "lfds/decompose.hpp"
#include "lfds/factor.hpp"
#include "lfds/height.hpp"
#include "lfds/hensel.hpp"
#include "lfds/intfactor.hpp"
#include "lfds/oracle.hpp"
#include "lfds/order.hpp"
#include "lfds/poly.hpp"
#include "lfds/poly_text.hpp"
#include "lfds/ring.hpp"

namespace tutil {

using namespace lfds;

inline RingSpecPtr zp(int64_t p, int e) { return make_ring_spec(p, 1, e); }

// Tower with the lexicographically first irreducible monic h of degree d.
inline RingSpecPtr gr(int64_t p, int d, int e) {
    static std::map<std::pair<int64_t, int>, std::vector<int64_t>> cache;
    auto key = std::make_pair(p, d);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto base = make_ring_spec(p, 1, 1);
        std::vector<int64_t> h(static_cast<size_t>(d) + 1, 0);
        h[static_cast<size_t>(d)] = 1;
        while (true) {
            std::vector<GrElem> coeffs;
            for (int64_t c : h) coeffs.push_back(GrElem::from_int(base, 1, c));
            if (is_irreducible(GrPoly::from_elems(coeffs))) break;
            int i = 0;
            while (i < d && ++h[static_cast<size_t>(i)] == p) h[static_cast<size_t>(i++)] = 0;
        }
        it = cache.emplace(key, h).first;
    }
    return make_ring_spec(p, d, e, it->second);
}

inline GrPoly P(const RingSpecPtr& spec, int eps, const std::string& text) {
    return parse_poly(spec, eps, text);
}

inline GrPoly random_poly(const RingSpecPtr& spec, int eps, std::mt19937_64& rng, int deg,
                          bool monic = false) {
    const size_t d = static_cast<size_t>(spec->d());
    const uint64_t pe = static_cast<uint64_t>(spec->char_pow(eps));
    std::vector<int64_t> flat((static_cast<size_t>(deg) + 1) * d, 0);
    for (auto& v : flat) v = static_cast<int64_t>(rng() % pe);
    if (monic) {
        for (size_t j = 0; j < d; ++j) flat[static_cast<size_t>(deg) * d + j] = j == 0 ? 1 : 0;
    }
    return GrPoly::from_raw(spec, eps, std::move(flat));
}

inline GrElem random_elem(const RingSpecPtr& spec, int eps, std::mt19937_64& rng) {
    const uint64_t pe = static_cast<uint64_t>(spec->char_pow(eps));
    std::vector<int64_t> c(static_cast<size_t>(spec->d()));
    for (auto& v : c) v = static_cast<int64_t>(rng() % pe);
    return GrElem(spec, eps, std::move(c));
}

// Quadratic reference product over the element API.
inline GrPoly naive_mul(const GrPoly& a, const GrPoly& b) {
    if (a.is_zero() || b.is_zero()) return GrPoly::zero(a.spec(), a.precision());
    std::vector<GrElem> out(static_cast<size_t>(a.degree() + b.degree()) + 1,
                            GrElem::zero(a.spec(), a.precision()));
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j)
            out[static_cast<size_t>(i + j)] = out[static_cast<size_t>(i + j)] + a.coeff(i) * b.coeff(j);
    return GrPoly::from_elems(out);
}

struct RandomSystem {
    RingSpecPtr spec;
    GrPoly f, m;
    int e;
};

// Random regular system with state count p^(d*e*deg m) <= max_states and
// deg m <= max_deg, or nothing if no degree >= 2 fits.
inline std::optional<RandomSystem> random_system(std::mt19937_64& rng, int64_t p, int d, int e,
                                                 uint64_t max_states, int max_deg = 8) {
    int n_max = 0;
    Int states = 1;
    const Int step = int_pow(Int(p), static_cast<uint64_t>(d) * static_cast<uint64_t>(e));
    while (states * step <= max_states && n_max < max_deg) {
        states *= step;
        ++n_max;
    }
    if (n_max < 2) return std::nullopt;
    RingSpecPtr spec = d == 1 ? zp(p, e) : gr(p, d, e);
    const int n = 2 + static_cast<int>(rng() % static_cast<uint64_t>(n_max - 1));
    GrPoly m = random_poly(spec, e, rng, n, true);
    while (true) {
        const int df = 1 + static_cast<int>(rng() % static_cast<uint64_t>(n - 1));
        GrPoly f = random_poly(spec, e, rng, df);
        if (!f.project(1).is_zero() && f.degree() >= 1)
            return RandomSystem{spec, std::move(f), std::move(m), e};
    }
}

}  // namespace tutil
