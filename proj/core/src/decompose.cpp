#include "lfds/decompose.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lfds/hensel.hpp"

namespace lfds {

namespace {

struct RoutedDecomposition {
    GrPoly M1, M2;
    std::vector<std::pair<GrPoly, int>> bij;  // factors of M1
    std::vector<std::pair<GrPoly, int>> nil;  // factors of M2
};

RoutedDecomposition route_factors(const GrPoly& F, const GrPoly& M, uint64_t seed) {
    if (M.is_zero() || !M.is_monic())
        throw std::invalid_argument("f_decompose_field: M must be monic and nonzero");
    if (F.is_zero()) throw std::invalid_argument("f_decompose_field: F must be nonzero");
    if (F.degree() >= M.degree())
        throw std::invalid_argument("f_decompose_field: deg F must be smaller than deg M");

    RoutedDecomposition out{GrPoly::one(M.spec(), 1), GrPoly::one(M.spec(), 1), {}, {}};
    for (const auto& [g, k] : factor(M, seed).factors) {
        const bool divides_f = poly_rem(F, g).is_zero();
        GrPoly block = poly_pow(g, k);
        if (divides_f) {
            out.M2 = out.M2 * block;
            out.nil.emplace_back(g, k);
        } else {
            out.M1 = out.M1 * block;
            out.bij.emplace_back(g, k);
        }
    }
    return out;
}

}  // namespace

std::pair<GrPoly, GrPoly> f_decompose_field(const GrPoly& F, const GrPoly& M, uint64_t seed) {
    auto routed = route_factors(F, M, seed);
    return {std::move(routed.M1), std::move(routed.M2)};
}

SystemSplit split_system(const GrPoly& f, const GrPoly& m, int eps, uint64_t seed) {
    if (m.is_zero() || !m.is_monic()) throw std::invalid_argument("split_system: m must be monic");
    if (f.degree() < 1 || f.degree() >= m.degree())
        throw std::invalid_argument("split_system: need 1 <= deg f < deg m");
    if (eps < 1 || eps > f.precision() || eps > m.precision())
        throw std::invalid_argument("split_system: precision out of range");
    const GrPoly F = f.project(1);
    if (F.is_zero())
        throw std::domain_error("split_system: f is a zero divisor mod p (rejected)");

    auto routed = route_factors(F, m.project(1), seed);

    std::vector<GrPoly> blocks;
    for (const auto& [g, k] : routed.bij) blocks.push_back(poly_pow(g, k));
    const bool has_nil = routed.M2.degree() >= 1;
    if (has_nil) blocks.push_back(routed.M2);
    if (blocks.empty()) {
        // m a unit mod p is excluded by deg m >= 1 and monic m.
        throw std::domain_error("split_system: m has no factors mod p");
    }

    std::vector<GrPoly> lifted = eps == 1 ? blocks : hensel_multi(m.project(eps), blocks, eps);
    SystemSplit split{eps, GrPoly::one(m.spec(), eps), GrPoly::one(m.spec(), eps), {}, routed.bij};
    if (has_nil) {
        split.m2 = lifted.back();
        lifted.pop_back();
    }
    split.bijective_factors = std::move(lifted);
    for (const auto& g : split.bijective_factors) split.m1 = split.m1 * g;
    return split;
}

std::vector<ThetaGroup> theta_grouping(const SystemSplit& split, const std::vector<Int>& orders) {
    if (orders.size() != split.field_data.size())
        throw std::invalid_argument("theta_grouping: one base order per factor required");

    std::map<Int, std::vector<size_t>> by_order;
    for (size_t i = 0; i < orders.size(); ++i) by_order[orders[i]].push_back(i);

    std::vector<ThetaGroup> groups;
    std::vector<GrPoly> thetas;
    const auto& spec = split.m1.spec();
    int index = 0;
    for (const auto& [order, members] : by_order) {
        ThetaGroup g{index++, {}, GrPoly::one(spec, 1), GrPoly::one(spec, 1), order};
        for (size_t i : members) {
            const auto& [G, k] = split.field_data[i];
            g.members.push_back(G);
            g.theta_field = g.theta_field * poly_pow(G, k);
        }
        thetas.push_back(g.theta_field);
        groups.push_back(std::move(g));
    }
    if (groups.empty()) return groups;

    std::vector<GrPoly> lifted = split.precision == 1
                                     ? thetas
                                     : hensel_multi(split.m1, thetas, split.precision);
    for (size_t j = 0; j < groups.size(); ++j) groups[j].theta_lifted = lifted[j];
    return groups;
}

}  // namespace lfds
