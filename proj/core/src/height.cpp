#include "lfds/height.hpp"

#include <algorithm>
#include <stdexcept>

#include "lfds/decompose.hpp"
#include "lfds/errors.hpp"
#include "pipeline.hpp"

namespace lfds {

namespace {

int multiplicity(const GrPoly& base, GrPoly value) {
    int count = 0;
    while (value.degree() >= base.degree()) {
        auto [q, r] = poly_divmod(value, base);
        if (!r.is_zero()) break;
        ++count;
        value = std::move(q);
    }
    return count;
}

}  // namespace

int64_t height_field(const GrPoly& F, const GrPoly& M2,
                     const std::vector<std::pair<GrPoly, int>>& f_factorization) {
    if (M2.degree() < 1) return 0;
    int64_t h = 0;
    int64_t covered = 0;
    for (const auto& [g, kf] : f_factorization) {
        const int k2 = multiplicity(g, M2);
        if (k2 == 0) continue;
        covered += static_cast<int64_t>(k2) * g.degree();
        h = std::max<int64_t>(h, (k2 + kf - 1) / kf);
    }
    if (covered != M2.degree())
        throw std::domain_error("height_field: rad(M2) does not divide F");
    return h;
}

HeightReport height_ring(const GrPoly& f, const GrPoly& m, int e, const Int& l_max,
                         uint64_t seed) {
    if (e < 1 || e > f.precision() || e > m.precision())
        throw std::invalid_argument("height_ring: e out of range");
    auto pipe = detail::field_pipeline(f, m, seed);
    const int64_t tau = height_field(pipe.F, pipe.M2, factor(pipe.F, seed).factors);
    if (tau == 0) return {0, 0, 0, 0};

    const GrPoly fe = f.project(e);
    const GrPoly me = m.project(e);
    const GrPoly f_lmax = mod_pow(fe, l_max, me);
    int probes = 0;
    auto probe = [&](int64_t h) {
        ++probes;
        GrPoly fh = mod_pow(fe, Int(h), me);
        return poly_rem(fh * f_lmax, me) == fh;
    };

    int64_t lo = tau, hi = static_cast<int64_t>(e) * tau;
    while (lo < hi) {
        int64_t mid = lo + (hi - lo) / 2;
        if (probe(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    if (!probe(lo)) throw std::domain_error("height_ring: probe failed at the upper bound");
    return {tau, static_cast<int64_t>(e) * tau, lo, probes};
}

std::pair<uint64_t, uint64_t> per_pper_of_one(const GrPoly& f, const GrPoly& m, int eps,
                                              uint64_t step_limit) {
    if (eps < 1 || eps > f.precision() || eps > m.precision())
        throw std::invalid_argument("per_pper_of_one: precision out of range");
    const GrPoly fe = f.project(eps);
    const GrPoly me = m.project(eps);
    auto step = [&](const GrPoly& z) { return poly_rem(fe * z, me); };

    const GrPoly start = GrPoly::one(f.spec(), eps);
    uint64_t steps = 0;
    auto guard = [&]() {
        if (++steps > step_limit) throw resource_error("per_pper_of_one: step limit exceeded");
    };

    // Brent: find the period first, then walk to the cycle entry.
    uint64_t power = 1, lam = 1;
    GrPoly tortoise = start;
    GrPoly hare = step(start);
    guard();
    while (tortoise != hare) {
        if (power == lam) {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        hare = step(hare);
        guard();
        ++lam;
    }

    tortoise = start;
    hare = start;
    for (uint64_t i = 0; i < lam; ++i) {
        hare = step(hare);
        guard();
    }
    uint64_t mu = 0;
    while (tortoise != hare) {
        tortoise = step(tortoise);
        hare = step(hare);
        guard();
        guard();
        ++mu;
    }
    return {mu, lam};
}

}  // namespace lfds
