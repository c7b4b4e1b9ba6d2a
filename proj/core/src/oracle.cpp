#include "lfds/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lfds/errors.hpp"
#include "lfds/poly_text.hpp"
#include "kernels.hpp"

namespace lfds {

namespace {

struct StateSpace {
    RingSpecPtr spec;
    int eps;
    int n;            // deg m
    size_t digits;    // n * d
    int64_t base;     // p^eps
    uint64_t count;   // base^digits

    std::vector<std::vector<int64_t>> images;  // successor image of each basis digit
};

StateSpace make_space(const GrPoly& f, const GrPoly& m, int eps, uint64_t cap) {
    if (eps < 1 || eps > f.precision() || eps > m.precision())
        throw std::invalid_argument("oracle: precision out of range");
    if (m.degree() < 1 || !m.is_monic())
        throw std::invalid_argument("oracle: m must be monic of degree >= 1");

    StateSpace sp;
    sp.spec = f.spec();
    sp.eps = eps;
    sp.n = m.degree();
    sp.digits = static_cast<size_t>(sp.n) * static_cast<size_t>(sp.spec->d());
    sp.base = sp.spec->char_pow(eps);

    Int total = int_pow(Int(sp.base), sp.digits);
    if (total > cap)
        throw resource_error("oracle: state count " + total.str() + " exceeds cap " +
                             std::to_string(cap));
    if (total > (Int(1) << 31)) throw resource_error("oracle: state count exceeds index range");
    sp.count = static_cast<uint64_t>(total);

    const GrPoly fe = f.project(eps);
    const GrPoly me = m.project(eps);
    const size_t d = static_cast<size_t>(sp.spec->d());
    for (size_t j = 0; j < sp.digits; ++j) {
        const int xi = static_cast<int>(j / d);
        const int ti = static_cast<int>(j % d);
        std::vector<int64_t> basis(sp.digits, 0);
        basis[static_cast<size_t>(xi) * d + static_cast<size_t>(ti)] = 1;
        GrPoly img = poly_rem(fe * GrPoly::from_raw(sp.spec, eps, std::move(basis)), me);
        std::vector<int64_t> flat(sp.digits, 0);
        std::copy(img.raw().begin(), img.raw().end(), flat.begin());
        sp.images.push_back(std::move(flat));
    }
    return sp;
}

// Successor array via linearity: enumerate states as a mixed-radix counter,
// maintaining succ(state) incrementally (each digit bump adds one image).
std::vector<uint32_t> successor_array(const StateSpace& sp) {
    std::vector<uint32_t> succ(sp.count);
    std::vector<int64_t> digitv(sp.digits, 0), acc(sp.digits, 0);
    std::vector<uint64_t> pow(sp.digits + 1);
    pow[0] = 1;
    for (size_t j = 0; j < sp.digits; ++j) pow[j + 1] = pow[j] * static_cast<uint64_t>(sp.base);

    for (uint64_t idx = 0;; ++idx) {
        uint64_t enc = 0;
        for (size_t j = 0; j < sp.digits; ++j) enc += static_cast<uint64_t>(acc[j]) * pow[j];
        succ[idx] = static_cast<uint32_t>(enc);
        if (idx + 1 == sp.count) break;
        size_t j = 0;
        while (true) {
            const auto& img = sp.images[j];
            for (size_t t = 0; t < sp.digits; ++t)
                acc[t] = detail::addmod(acc[t], img[t], sp.base);
            if (++digitv[j] < sp.base) break;
            digitv[j] = 0;
            ++j;
        }
    }
    return succ;
}

GrPoly decode_state(const StateSpace& sp, uint64_t idx) {
    std::vector<int64_t> flat(sp.digits);
    for (size_t j = 0; j < sp.digits; ++j) {
        flat[j] = static_cast<int64_t>(idx % static_cast<uint64_t>(sp.base));
        idx /= static_cast<uint64_t>(sp.base);
    }
    return GrPoly::from_raw(sp.spec, sp.eps, std::move(flat));
}

}  // namespace

GraphSummary build_graph(const GrPoly& f, const GrPoly& m, int eps, uint64_t cap) {
    const StateSpace sp = make_space(f, m, eps, cap);
    const std::vector<uint32_t> succ = successor_array(sp);
    const uint64_t n = sp.count;

    // Peel leaves inward; what survives is the 1-regular cyclic core.
    std::vector<uint32_t> indeg(n, 0), height(n, 0);
    for (uint64_t u = 0; u < n; ++u) indeg[succ[u]] += 1;
    std::vector<uint32_t> stack, order;
    order.reserve(n);
    for (uint64_t u = 0; u < n; ++u)
        if (indeg[u] == 0) stack.push_back(static_cast<uint32_t>(u));
    while (!stack.empty()) {
        uint32_t u = stack.back();
        stack.pop_back();
        order.push_back(u);
        uint32_t v = succ[u];
        height[v] = std::max(height[v], height[u] + 1);
        if (--indeg[v] == 0) stack.push_back(v);
    }

    GraphSummary out;
    out.state_count = n;
    out.max_height = 0;

    std::vector<uint32_t> comp(n, UINT32_MAX);
    std::map<uint64_t, uint64_t> cycle_count;
    for (uint64_t u = 0; u < n; ++u) {
        if (indeg[u] == 0 || comp[u] != UINT32_MAX) continue;
        // Walk the cycle through u.
        uint64_t len = 0;
        uint64_t tree_h = 0;
        const uint32_t id = static_cast<uint32_t>(out.components.size());
        uint32_t v = static_cast<uint32_t>(u);
        do {
            comp[v] = id;
            tree_h = std::max<uint64_t>(tree_h, height[v]);
            ++len;
            v = succ[v];
        } while (v != u);
        cycle_count[len] += 1;
        out.max_height = std::max(out.max_height, tree_h);
        out.components.push_back({len, len, tree_h});
    }
    // Tree vertices inherit the component of their successor (reverse peel order).
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        comp[*it] = comp[succ[*it]];
        out.components[comp[*it]].size += 1;
    }
    out.cycles.assign(cycle_count.begin(), cycle_count.end());
    return out;
}

OrbitTrace orbit_trace(const GrPoly& f, const GrPoly& m, int eps, const GrPoly& z,
                       uint64_t limit) {
    if (eps < 1 || eps > f.precision() || eps > m.precision())
        throw std::invalid_argument("orbit_trace: precision out of range");
    const GrPoly fe = f.project(eps);
    const GrPoly me = m.project(eps);

    OrbitTrace out;
    std::map<std::vector<int64_t>, uint64_t> seen;
    GrPoly cur = poly_rem(z.precision() == eps ? z : z.project(eps), me);
    uint64_t k = 0;
    while (true) {
        auto it = seen.find(cur.raw());
        if (it != seen.end()) {
            out.preperiod = it->second;
            out.period = k - it->second;
            return out;
        }
        if (k >= limit) throw resource_error("orbit_trace: iteration limit exceeded");
        seen.emplace(cur.raw(), k);
        out.states.push_back(cur);
        cur = poly_rem(fe * cur, me);
        ++k;
    }
}

std::string export_dot(const GrPoly& f, const GrPoly& m, int eps, uint64_t cap) {
    const StateSpace sp = make_space(f, m, eps, cap);
    const std::vector<uint32_t> succ = successor_array(sp);
    std::ostringstream os;
    os << "digraph lfds {\n";
    for (uint64_t u = 0; u < sp.count; ++u)
        os << "  n" << u << " [label=\"" << print_poly(decode_state(sp, u)) << "\"];\n";
    for (uint64_t u = 0; u < sp.count; ++u) os << "  n" << u << " -> n" << succ[u] << ";\n";
    os << "}\n";
    return os.str();
}

std::string export_dot(const GraphSummary& summary) {
    std::ostringstream os;
    os << "digraph lfds_summary {\n";
    for (size_t i = 0; i < summary.components.size(); ++i) {
        const auto& c = summary.components[i];
        os << "  c" << i << " [shape=box,label=\"cycle " << c.cycle_length << ", size " << c.size
           << ", tree height " << c.tree_height << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace lfds
