#include <doctest.h>

#include "util.hpp"

using namespace tutil;

namespace {

CycleSet set_of(std::initializer_list<int64_t> xs) {
    CycleSet c;
    for (auto x : xs) c.lengths.insert(Int(x));
    return c;
}

}  // namespace

TEST_SUITE("cycle_set") {
    TEST_CASE("lcm product") {
        CycleSet x = set_of({1, 7});
        CHECK(lcm_product(x, set_of({1})) == x);
        CHECK(lcm_product(x, set_of({1, 4})) == set_of({1, 4, 7, 28}));
        CycleSet a = set_of({1, 2}), b = set_of({1, 3}), c = set_of({1, 5});
        CHECK(lcm_product(lcm_product(a, b), c) == lcm_product(a, lcm_product(b, c)));
        CHECK(lcm_product(a, b) == lcm_product(b, a));
    }

    TEST_CASE("field-level cycle sets") {
        auto f2 = zp(2, 1);
        CHECK(cycle_set_field(P(f2, 1, "x^13+x"), P(f2, 1, "x^14+1")) == set_of({1, 7, 14}));
        CHECK(cycle_set_field(P(f2, 1, "x"), P(f2, 1, "x^3+x+1")) == set_of({1, 7}));
        CHECK(cycle_set_field(P(f2, 1, "x"), P(f2, 1, "x^2")) == set_of({1}));
    }

    TEST_CASE("field census") {
        auto f2 = zp(2, 1);
        SUBCASE("primary squared") {
            auto census = cycle_census_field(P(f2, 1, "x"), poly_pow(P(f2, 1, "x^3+x+1"), 2));
            REQUIRE(census.entries.size() == 3);
            CHECK(census.entries[0] == std::make_pair(Int(1), Int(1)));
            CHECK(census.entries[1] == std::make_pair(Int(7), Int(1)));
            CHECK(census.entries[2] == std::make_pair(Int(14), Int(4)));
            CHECK(census.periodic_states == 64);
        }
        SUBCASE("irreducible") {
            auto census = cycle_census_field(P(f2, 1, "x"), P(f2, 1, "x^3+x+1"));
            REQUIRE(census.entries.size() == 2);
            CHECK(census.entries[0] == std::make_pair(Int(1), Int(1)));
            CHECK(census.entries[1] == std::make_pair(Int(7), Int(1)));
        }
        SUBCASE("partition identity on random systems") {
            std::mt19937_64 rng(103);
            for (int64_t p : {2, 3, 5}) {
                int done = 0;
                while (done < 10) {
                    auto sys = random_system(rng, p, 1, 1, 1u << 12);
                    if (!sys) break;
                    auto census = cycle_census_field(sys->f, sys->m);
                    Int total = 0;
                    for (const auto& [len, count] : census.entries) total += len * count;
                    CHECK(total == census.periodic_states);
                    ++done;
                }
            }
        }
    }

    TEST_CASE("ring-level cycle sets of the running example") {
        auto z8 = zp(2, 3);
        GrPoly f = P(z8, 3, "x^13+x");
        GrPoly m = P(z8, 3, "x^14-1");
        auto sets = cycle_set_ring(f, m, 3);
        REQUIRE(sets.size() == 3);
        CHECK(sets[0] == set_of({1, 7, 14}));
        CHECK(sets[1] == set_of({1, 7, 14}));
        CHECK(sets[2] == set_of({1, 7, 14, 28}));

        auto grouped = cycle_set_ring_grouped(f, m, 3);
        REQUIRE(grouped.size() == 3);
        for (int i = 0; i < 3; ++i) CHECK(grouped[static_cast<size_t>(i)] == sets[static_cast<size_t>(i)]);
    }

    TEST_CASE("e = 1 equals the field set") {
        auto f2 = zp(2, 1);
        auto sets = cycle_set_ring(P(f2, 1, "x^13+x"), P(f2, 1, "x^14+1"), 1);
        REQUIRE(sets.size() == 1);
        CHECK(sets[0] == cycle_set_field(P(f2, 1, "x^13+x"), P(f2, 1, "x^14+1")));
    }

    TEST_CASE("structural invariants on random systems") {
        std::mt19937_64 rng(107);
        int done = 0;
        while (done < 40) {
            auto sys = random_system(rng, done % 2 ? 2 : 3, 1, 3, 1u << 15);
            if (!sys) break;
            auto sets = cycle_set_ring(sys->f, sys->m, sys->e);
            auto grouped = cycle_set_ring_grouped(sys->f, sys->m, sys->e);
            REQUIRE(sets.size() == static_cast<size_t>(sys->e));
            const Int p(sys->spec->p());
            for (size_t i = 0; i < sets.size(); ++i) {
                CHECK(sets[i] == grouped[i]);
                CHECK(sets[i].contains(1));
                if (i > 0) {
                    // containment in the next precision
                    for (const auto& len : sets[i - 1].lengths) CHECK(sets[i].contains(len));
                }
                // every length is p^j * (some field-level length), j < e
                for (const auto& len : sets[i].lengths) {
                    Int reduced = len;
                    int j = 0;
                    while (reduced % p == 0 && !sets[0].contains(reduced)) {
                        reduced /= p;
                        ++j;
                    }
                    CHECK(j < sys->e);
                    CHECK(sets[0].contains(reduced));
                }
            }
            ++done;
        }
        CHECK(done == 40);
    }

    TEST_CASE("every length divides the period of one") {
        std::mt19937_64 rng(109);
        int done = 0;
        while (done < 15) {
            auto sys = random_system(rng, 2, 1, 2, 1u << 12);
            if (!sys) break;
            auto sets = cycle_set_ring(sys->f, sys->m, sys->e);
            auto [pper, per] = per_pper_of_one(sys->f, sys->m, sys->e);
            for (const auto& len : sets.back().lengths) CHECK(Int(per) % len == 0);
            ++done;
        }
    }
}
