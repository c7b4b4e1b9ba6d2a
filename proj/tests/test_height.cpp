#include <doctest.h>

#include "util.hpp"

using namespace tutil;

TEST_SUITE("height") {
    TEST_CASE("field height of the running example") {
        auto f2 = zp(2, 1);
        GrPoly F = P(f2, 1, "x^13+x");
        GrPoly M2 = P(f2, 1, "x^2+1");
        CHECK(height_field(F, M2, factor(F).factors) == 1);
        CHECK(height_field(F, GrPoly::one(f2, 1), factor(F).factors) == 0);
    }

    TEST_CASE("radical case has height one") {
        auto f2 = zp(2, 1);
        GrPoly F = P(f2, 1, "x^2+x");  // x(x+1)
        CHECK(height_field(F, F, factor(F).factors) == 1);
    }

    TEST_CASE("precondition violation") {
        auto f2 = zp(2, 1);
        GrPoly F = P(f2, 1, "x^2+x");
        CHECK_THROWS_AS(height_field(F, P(f2, 1, "x^3+x+1"), factor(F).factors),
                        std::domain_error);
    }

    TEST_CASE("ring height of the running example") {
        auto f2 = zp(2, 1);
        GrPoly f = P(f2, 1, "x^13+x");
        GrPoly m = P(f2, 1, "x^14-1");
        auto sets = cycle_set_ring(f, m, 1);
        HeightReport rep = height_ring(f, m, 1, sets.back().max());
        CHECK(rep.field_height == 1);
        CHECK(rep.height == 1);
        CHECK(rep.bound == 1);
        CHECK(rep.probe_count >= 1);
    }

    TEST_CASE("coprime system has height zero") {
        auto z4 = zp(2, 2);
        GrPoly f = P(z4, 2, "x");
        GrPoly m = P(z4, 2, "x^3+x+1");
        HeightReport rep = height_ring(f, m, 2, cycle_set_ring(f, m, 2).back().max());
        CHECK(rep.height == 0);
        CHECK(rep.probe_count == 0);
        auto [pper, per] = per_pper_of_one(f, m, 2);
        CHECK(pper == 0);
    }

    TEST_CASE("orbit of one") {
        auto f2 = zp(2, 1);
        GrPoly f = P(f2, 1, "x^13+x");
        GrPoly m = P(f2, 1, "x^14-1");
        auto [pper, per] = per_pper_of_one(f, m, 1);
        CHECK(pper == 1);
        CHECK(14 % per == 0);
        CHECK_THROWS_AS(per_pper_of_one(f, m, 1, 2), resource_error);
    }

    TEST_CASE("height equals the preperiod of one and respects the bounds") {
        std::mt19937_64 rng(113);
        int done = 0;
        while (done < 30) {
            auto sys = random_system(rng, done % 2 ? 2 : 5, 1, 2, 1u << 12);
            if (!sys) break;
            auto sets = cycle_set_ring(sys->f, sys->m, sys->e);
            HeightReport rep = height_ring(sys->f, sys->m, sys->e, sets.back().max());
            auto [pper, per] = per_pper_of_one(sys->f, sys->m, sys->e);
            CHECK(Int(rep.height) == Int(pper));
            CHECK(rep.field_height <= rep.height);
            CHECK(rep.height <= rep.bound);
            CHECK(rep.bound == rep.field_height * sys->e);
            ++done;
        }
        CHECK(done == 30);
    }

    TEST_CASE("probe congruence is monotone") {
        auto z8 = zp(2, 3);
        GrPoly f = P(z8, 3, "x^13+x");
        GrPoly m = P(z8, 3, "x^14-1");
        auto sets = cycle_set_ring(f, m, 3);
        const Int lmax = sets.back().max();
        HeightReport rep = height_ring(f, m, 3, lmax);
        const GrPoly fe = f, me = m;
        GrPoly fl = mod_pow(fe, lmax, me);
        auto probe = [&](int64_t h) {
            GrPoly fh = mod_pow(fe, Int(h), me);
            return poly_rem(fh * fl, me) == fh;
        };
        for (int64_t h = rep.height; h <= rep.bound; ++h) CHECK(probe(h));
        for (int64_t h = rep.field_height; h < rep.height; ++h) CHECK_FALSE(probe(h));
    }
}
