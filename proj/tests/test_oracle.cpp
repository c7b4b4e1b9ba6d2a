#include <doctest.h>

#include <set>

#include "util.hpp"

using namespace tutil;

TEST_SUITE("oracle") {
    TEST_CASE("eight state graph") {
        auto f2 = zp(2, 1);
        GraphSummary g = build_graph(P(f2, 1, "x"), P(f2, 1, "x^3+x+1"), 1);
        CHECK(g.state_count == 8);
        REQUIRE(g.cycles.size() == 2);
        CHECK(g.cycles[0] == std::make_pair(uint64_t(1), uint64_t(1)));
        CHECK(g.cycles[1] == std::make_pair(uint64_t(7), uint64_t(1)));
        CHECK(g.max_height == 0);
    }

    TEST_CASE("running example at precision one") {
        auto f2 = zp(2, 1);
        GraphSummary g = build_graph(P(f2, 1, "x^13+x"), P(f2, 1, "x^14-1"), 1, 1u << 20);
        CHECK(g.state_count == 16384);
        std::set<uint64_t> lengths;
        for (const auto& [len, count] : g.cycles) lengths.insert(len);
        CHECK(lengths == std::set<uint64_t>{1, 7, 14});
        CHECK(g.max_height == 1);
    }

    TEST_CASE("nilpotent system funnels to zero") {
        auto f2 = zp(2, 1);
        GraphSummary g = build_graph(P(f2, 1, "x"), P(f2, 1, "x^3"), 1);
        CHECK(g.state_count == 8);
        REQUIRE(g.components.size() == 1);
        CHECK(g.components[0].cycle_length == 1);
        CHECK(g.components[0].size == 8);
        CHECK(g.max_height == 3);
    }

    TEST_CASE("component sizes partition the state space") {
        std::mt19937_64 rng(127);
        int done = 0;
        while (done < 25) {
            auto sys = random_system(rng, done % 3 == 0 ? 3 : 2, 1, done % 2 + 1, 1u << 12);
            if (!sys) break;
            GraphSummary g = build_graph(sys->f, sys->m, sys->e, 1u << 12);
            uint64_t total = 0;
            for (const auto& c : g.components) total += c.size;
            CHECK(total == g.state_count);
            uint64_t cyc_total = 0;
            for (const auto& [len, count] : g.cycles) cyc_total += count;
            CHECK(cyc_total == g.components.size());
            ++done;
        }
        CHECK(done == 25);
    }

    TEST_CASE("cap enforcement") {
        auto f2 = zp(2, 1);
        CHECK_THROWS_AS(build_graph(P(f2, 1, "x^13+x"), P(f2, 1, "x^14-1"), 1, 1024),
                        resource_error);
    }

    TEST_CASE("orbit trace of the paper tables") {
        auto z8 = zp(2, 3);
        GrPoly m = P(z8, 3, "x^14-1");
        GrPoly f = P(z8, 3, "x^13+x");
        GrPoly g1 = P(z8, 1, "x^3+x+1");

        SUBCASE("field level, multiplicity one block") {
            GrPoly ghat = poly_quot(m.project(1), g1);
            OrbitTrace t = orbit_trace(f, m, 1, ghat);
            CHECK(t.preperiod == 0);
            CHECK(t.period == 7);
            CHECK(t.states[1] ==
                  P(z8, 1, "x^13+x^12+x^9+x^7+x^6+x^5+x^2+1"));
        }
        SUBCASE("precision two, squared witness") {
            GrPoly ghat = poly_quot(m.project(1), poly_pow(g1, 2));
            GrPoly z = mod_pow(ghat.lift_reinterpret(2), Int(2), m.project(2));
            OrbitTrace t = orbit_trace(f, m, 2, z);
            CHECK(t.preperiod == 0);
            CHECK(t.period == 14);
            CHECK(t.states[1] == P(z8, 2, "3*x^13+x^9+x^7+x^5+2*x^3"));
        }
        SUBCASE("precision three, fourth power witness") {
            GrPoly ghat = poly_quot(m.project(1), poly_pow(g1, 2));
            GrPoly z = mod_pow(ghat.lift_reinterpret(3), Int(4), m);
            OrbitTrace t = orbit_trace(f, m, 3, z);
            CHECK(t.preperiod == 0);
            CHECK(t.period == 28);
            CHECK(t.states[1] == P(z8, 3, "3*x^13+4*x^11+x^9+x^7+x^5+6*x^3"));
        }
        SUBCASE("limit enforcement") {
            CHECK_THROWS_AS(orbit_trace(f, m, 1, GrPoly::one(z8, 1), 3), resource_error);
        }
    }

    TEST_CASE("dot export") {
        auto f2 = zp(2, 1);
        std::string dot = export_dot(P(f2, 1, "x"), P(f2, 1, "x^3+x+1"), 1);
        size_t edges = 0, nodes = 0;
        for (size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; ++pos) ++edges;
        for (size_t pos = 0; (pos = dot.find("label=", pos)) != std::string::npos; ++pos) ++nodes;
        CHECK(edges == 8);
        CHECK(nodes == 8);
        CHECK(dot.find("n0 -> n0") != std::string::npos);  // zero is a fixed point
        CHECK_THROWS_AS(export_dot(P(f2, 1, "x"), P(f2, 1, "x^13+x^2"), 1, 4096), resource_error);

        GraphSummary g = build_graph(P(f2, 1, "x"), P(f2, 1, "x^3+x+1"), 1);
        std::string summary = export_dot(g);
        CHECK(summary.find("cycle 7") != std::string::npos);
    }

    TEST_CASE("oracle agrees with the cycle set pipeline") {
        std::mt19937_64 rng(131);
        int done = 0;
        while (done < 20) {
            auto sys = random_system(rng, 2, 1, 2, 1u << 12);
            if (!sys) break;
            GraphSummary g = build_graph(sys->f, sys->m, sys->e, 1u << 12);
            auto sets = cycle_set_ring(sys->f, sys->m, sys->e);
            CycleSet oracle_set;
            for (const auto& [len, count] : g.cycles) oracle_set.lengths.insert(Int(len));
            CHECK(oracle_set == sets.back());
            ++done;
        }
        CHECK(done == 20);
    }
}
