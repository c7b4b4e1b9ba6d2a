#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lfds/poly.hpp"

namespace lfds {

// Exact census of the functional graph of g -> f*g on R_eps[x]/<m>.
struct GraphSummary {
    struct Component {
        uint64_t cycle_length;
        uint64_t size;         // cycle plus all trees
        uint64_t tree_height;  // max height over the cycle's trees
    };

    uint64_t state_count;
    std::vector<std::pair<uint64_t, uint64_t>> cycles;  // (length, count), sorted by length
    uint64_t max_height;
    std::vector<Component> components;
};

// Materializes the full successor array; requires q^(eps*deg m) <= cap.
GraphSummary build_graph(const GrPoly& f, const GrPoly& m, int eps, uint64_t cap = 1u << 20);

// Orbit of z under g -> f*g: states[k] = f^k * z, up to the first revisit.
struct OrbitTrace {
    std::vector<GrPoly> states;
    uint64_t preperiod;
    uint64_t period;
};
OrbitTrace orbit_trace(const GrPoly& f, const GrPoly& m, int eps, const GrPoly& z,
                       uint64_t limit = 1u << 20);

// Graphviz DOT text of the full graph (state count at most cap, default 4096),
// vertices labeled by canonical polynomial print, deterministic order.
std::string export_dot(const GrPoly& f, const GrPoly& m, int eps, uint64_t cap = 4096);

// Condensed DOT: one node per component.
std::string export_dot(const GraphSummary& summary);

}  // namespace lfds
