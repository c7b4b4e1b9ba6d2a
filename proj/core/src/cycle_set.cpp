#include "lfds/cycle_set.hpp"

#include <map>
#include <stdexcept>

#include "lfds/decompose.hpp"
#include "lfds/errors.hpp"
#include "lfds/order.hpp"
#include "pipeline.hpp"

namespace lfds {

namespace detail {

FieldPipeline field_pipeline(const GrPoly& f, const GrPoly& m, uint64_t seed) {
    if (m.is_zero() || !m.is_monic())
        throw std::invalid_argument("system: m must be monic and nonzero");
    if (f.degree() < 1 || f.degree() >= m.degree())
        throw std::invalid_argument("system: need 1 <= deg f < deg m");

    FieldPipeline pipe{f.project(1), m.project(1), GrPoly::one(f.spec(), 1),
                       GrPoly::one(f.spec(), 1), {}};
    if (pipe.F.is_zero())
        throw std::domain_error("system: f is a zero divisor mod p (rejected)");

    for (const auto& [g, k] : factor(pipe.M, seed).factors) {
        if (poly_rem(pipe.F, g).is_zero()) {
            pipe.M2 = pipe.M2 * poly_pow(g, k);
            continue;
        }
        pipe.M1 = pipe.M1 * poly_pow(g, k);
        FactorOrderData data{g, k, order_irreducible(pipe.F, g), 0, Int(1), {}};
        OrderRecord rec = order_prime_power(pipe.F, g, data.base_order, k);
        data.saturation = rec.saturation;
        for (int t = 1; t <= k; ++t) {
            Int coverage = rec.saturation, order = data.base_order;
            while (coverage < t) {
                coverage *= f.spec()->p();
                order *= f.spec()->p();
            }
            data.ladder.push_back(order);
        }
        data.marked_order = data.ladder.back();
        pipe.factors.push_back(std::move(data));
    }
    return pipe;
}

}  // namespace detail

CycleSet lcm_product(const CycleSet& x, const CycleSet& y) {
    CycleSet out;
    for (const auto& a : x.lengths)
        for (const auto& b : y.lengths) out.lengths.insert(int_lcm(a, b));
    return out;
}

namespace {

CycleSet field_set_from(const detail::FieldPipeline& pipe) {
    CycleSet c;
    for (const auto& fac : pipe.factors) {
        CycleSet ladder;
        for (const auto& o : fac.ladder) ladder.lengths.insert(o);
        c = lcm_product(c, ladder);
    }
    return c;
}

// Canonical witness for a divisor block B of M1: the coefficient lift of
// M/B into [0, p).
GrPoly witness_for(const detail::FieldPipeline& pipe, const GrPoly& block) {
    auto [q, r] = poly_divmod(pipe.M, block);
    if (!r.is_zero()) throw std::domain_error("cycle_set: witness division is not exact");
    return q;
}

struct TrackedClass {
    GrPoly witness;  // field level, coefficients in [0, p)
    Int marked_order;
    int omega = 0;
};

std::vector<CycleSet> ring_loop(const GrPoly& f, const GrPoly& m, int e,
                                const detail::FieldPipeline& pipe,
                                std::vector<TrackedClass> classes) {
    std::vector<CycleSet> out{field_set_from(pipe)};
    const Int p(f.spec()->p());
    for (int eps = 2; eps <= e; ++eps) {
        CycleSet h;
        for (auto& cls : classes) {
            Int prev = cls.marked_order * int_pow(p, static_cast<uint64_t>(cls.omega));
            if (omega_step(f, m, cls.witness, prev, eps)) cls.omega += 1;
            CycleSet k;
            k.lengths.insert(cls.marked_order * int_pow(p, static_cast<uint64_t>(cls.omega)));
            h = lcm_product(h, k);
        }
        CycleSet next = out.back();
        next.lengths.insert(h.lengths.begin(), h.lengths.end());
        out.push_back(std::move(next));
    }
    return out;
}

}  // namespace

CycleSet cycle_set_field(const GrPoly& f, const GrPoly& m, uint64_t seed) {
    return field_set_from(detail::field_pipeline(f, m, seed));
}

CycleCensusField cycle_census_field(const GrPoly& f, const GrPoly& m, uint64_t seed) {
    if (f.precision() != 1 || m.precision() != 1)
        throw std::invalid_argument("cycle_census_field: precision must be 1");
    auto pipe = detail::field_pipeline(f, m, seed);

    Int divisor_count = 1;
    for (const auto& fac : pipe.factors) {
        divisor_count *= fac.k + 1;
        if (divisor_count > 1000000)
            throw resource_error("cycle_census_field: too many divisors of M1");
    }

    const Int q = f.spec()->q();
    std::map<Int, Int> census;
    // Enumerate exponent tuples (j_i), 0 <= j_i <= k_i.
    std::vector<int> j(pipe.factors.size(), 0);
    while (true) {
        Int phi = 1, order = 1;
        for (size_t i = 0; i < j.size(); ++i) {
            if (j[i] == 0) continue;
            const auto& fac = pipe.factors[i];
            const uint64_t dg = static_cast<uint64_t>(fac.G.degree());
            phi *= int_pow(q, dg * static_cast<uint64_t>(j[i])) -
                   int_pow(q, dg * static_cast<uint64_t>(j[i] - 1));
            order = int_lcm(order, fac.ladder[static_cast<size_t>(j[i]) - 1]);
        }
        census[order] += phi / order;

        size_t idx = 0;
        while (idx < j.size() && j[idx] == pipe.factors[idx].k) j[idx++] = 0;
        if (idx == j.size()) break;
        j[idx] += 1;
    }

    CycleCensusField out;
    out.periodic_states = int_pow(q, static_cast<uint64_t>(pipe.M1.degree()));
    for (auto& [len, count] : census) out.entries.emplace_back(len, count);
    return out;
}

std::vector<CycleSet> cycle_set_ring(const GrPoly& f, const GrPoly& m, int e, uint64_t seed) {
    if (e < 1 || e > f.precision() || e > m.precision())
        throw std::invalid_argument("cycle_set_ring: e out of range");
    auto pipe = detail::field_pipeline(f, m, seed);
    std::vector<TrackedClass> classes;
    for (const auto& fac : pipe.factors)
        classes.push_back({witness_for(pipe, poly_pow(fac.G, fac.k)), fac.marked_order, 0});
    return ring_loop(f, m, e, pipe, std::move(classes));
}

std::vector<CycleSet> cycle_set_ring_grouped(const GrPoly& f, const GrPoly& m, int e,
                                             uint64_t seed) {
    if (e < 1 || e > f.precision() || e > m.precision())
        throw std::invalid_argument("cycle_set_ring_grouped: e out of range");
    auto pipe = detail::field_pipeline(f, m, seed);

    // Classes of equal base order; the class order is the lcm of the member
    // block orders, the witness covers the whole class block.
    std::map<Int, std::pair<GrPoly, Int>> grouped;  // base order -> (block, order)
    for (const auto& fac : pipe.factors) {
        auto it = grouped.find(fac.base_order);
        GrPoly block = poly_pow(fac.G, fac.k);
        if (it == grouped.end()) {
            grouped.emplace(fac.base_order, std::make_pair(block, fac.marked_order));
        } else {
            it->second.first = it->second.first * block;
            it->second.second = int_lcm(it->second.second, fac.marked_order);
        }
    }
    std::vector<TrackedClass> classes;
    for (auto& [base, data] : grouped)
        classes.push_back({witness_for(pipe, data.first), data.second, 0});
    return ring_loop(f, m, e, pipe, std::move(classes));
}

}  // namespace lfds
