#include <doctest.h>

#include "util.hpp"

using namespace tutil;

namespace {

// Order by brute iteration; independent of the engine's exponent stripping.
Int brute_order(const GrPoly& F, const GrPoly& M, uint64_t bound = 1u << 20) {
    GrPoly acc = poly_rem(F, M);
    const GrPoly one = GrPoly::one(F.spec(), 1);
    for (uint64_t k = 1; k <= bound; ++k) {
        if (acc == one) return Int(k);
        acc = poly_rem(acc * F, M);
    }
    FAIL("brute_order: bound exceeded");
    return 0;
}

}  // namespace

TEST_SUITE("order") {
    TEST_CASE("irreducible orders") {
        auto f2 = zp(2, 1);
        CHECK(order_irreducible(P(f2, 1, "x"), P(f2, 1, "x^3+x+1")) == 7);
        CHECK(order_irreducible(P(f2, 1, "x"), GrPoly::one(f2, 1)) == 1);

        auto f3 = zp(3, 1);
        CHECK(order_irreducible(P(f3, 1, "x"), P(f3, 1, "x+2")) == 1);  // x = 1 mod (x-1)
        CHECK(order_irreducible(P(f3, 1, "x"), P(f3, 1, "x+1")) == 2);  // x = -1 mod (x+1)

        CHECK_THROWS_AS(order_irreducible(P(f2, 1, "x"), P(f2, 1, "x^2+x")), std::domain_error);
    }

    TEST_CASE("order properties on random irreducibles") {
        std::mt19937_64 rng(83);
        for (auto spec : {zp(2, 1), zp(3, 1), gr(2, 2, 1)}) {
            int done = 0;
            while (done < 30) {
                GrPoly G = random_poly(spec, 1, rng, 2 + static_cast<int>(rng() % 3), true);
                if (!is_irreducible(G)) continue;
                GrPoly F = random_poly(spec, 1, rng, G.degree() + 2);
                if (F.is_zero() || field_gcd(F, G).degree() != 0) continue;
                Int ord = order_irreducible(F, G);
                Int bound = int_pow(spec->q(), static_cast<uint64_t>(G.degree())) - 1;
                CHECK(bound % ord == 0);
                CHECK(mod_pow(F, ord, G) == GrPoly::one(spec, 1));
                for (const auto& [rho, mult] : int_factorize(static_cast<uint64_t>(ord)))
                    CHECK(mod_pow(F, ord / rho, G) != GrPoly::one(spec, 1));
                CHECK(ord == brute_order(F, G));
                ++done;
            }
        }
    }

    TEST_CASE("prime power ladder of the order table") {
        auto f2 = zp(2, 1);
        GrPoly F = P(f2, 1, "x"), G = P(f2, 1, "x^3+x+1");
        Int base = order_irreducible(F, G);
        REQUIRE(base == 7);
        std::vector<Int> expected{7,  14, 28, 28, 56, 56, 56, 56,
                                  112, 112, 112, 112, 112, 112, 112, 112};
        for (int t = 1; t <= 16; ++t) {
            OrderRecord rec = order_prime_power(F, G, base, t);
            CHECK(rec.order == expected[static_cast<size_t>(t - 1)]);
            CHECK(rec.base_order == base);
        }
        CHECK(order_prime_power(F, G, base, 1).saturation == 1);
    }

    TEST_CASE("prime power examples from the degree-14 system") {
        auto f2 = zp(2, 1);
        GrPoly F = P(f2, 1, "x^13+x"), G = P(f2, 1, "x^3+x+1");
        Int base = order_irreducible(F, G);
        CHECK(base == 7);
        CHECK(order_prime_power(F, G, base, 2).order == 14);
    }

    TEST_CASE("saturated exponents keep the base order") {
        auto f3 = zp(3, 1);
        std::mt19937_64 rng(89);
        int done = 0;
        while (done < 20) {
            GrPoly G = random_poly(f3, 1, rng, 2, true);
            if (!is_irreducible(G)) continue;
            GrPoly F = random_poly(f3, 1, rng, 3);
            if (F.is_zero() || field_gcd(F, G).degree() != 0) continue;
            Int base = order_irreducible(F, G);
            OrderRecord rec = order_prime_power(F, G, base, 1);
            if (rec.saturation >= 1) CHECK(order_prime_power(F, G, base, rec.saturation).order == base);
            ++done;
        }
    }

    TEST_CASE("prime power agrees with direct search") {
        std::mt19937_64 rng(97);
        for (auto spec : {zp(2, 1), zp(3, 1)}) {
            int done = 0;
            while (done < 15) {
                GrPoly G = random_poly(spec, 1, rng, 2 + static_cast<int>(rng() % 3), true);
                if (!is_irreducible(G) || G.degree() > 4) continue;
                GrPoly F = random_poly(spec, 1, rng, 4);
                if (F.is_zero() || field_gcd(F, G).degree() != 0) continue;
                Int base = order_irreducible(F, G);
                for (int t = 1; t <= 8; ++t) {
                    OrderRecord rec = order_prime_power(F, G, base, t);
                    CHECK(rec.order == brute_order(F, poly_pow(G, t)));
                }
                ++done;
            }
        }
    }

    TEST_CASE("composite orders") {
        auto f2 = zp(2, 1);
        GrPoly F = P(f2, 1, "x^13+x");
        GrPoly M = poly_pow(P(f2, 1, "x^3+x+1"), 2) * poly_pow(P(f2, 1, "x^3+x^2+1"), 2);
        CHECK(order_composite(F, M) == 14);
        CHECK(order_composite(P(f2, 1, "x"), P(f2, 1, "x^3+x+1")) ==
              order_irreducible(P(f2, 1, "x"), P(f2, 1, "x^3+x+1")));
        CHECK_THROWS_AS(order_composite(F, P(f2, 1, "x^2+1")), std::domain_error);

        std::mt19937_64 rng(101);
        for (auto spec : {zp(2, 1), zp(5, 1)}) {
            int done = 0;
            while (done < 15) {
                GrPoly M = random_poly(spec, 1, rng, 2 + static_cast<int>(rng() % 7), true);
                GrPoly F = random_poly(spec, 1, rng, M.degree() - 1);
                if (F.is_zero() || M.degree() < 2) continue;
                if (field_gcd(F, M).degree() != 0) continue;
                CHECK(order_composite(F, M) == brute_order(F, M));
                ++done;
            }
        }
    }

    TEST_CASE("omega step on the running example") {
        auto z8 = zp(2, 3);
        GrPoly f = P(z8, 3, "x^13+x");
        GrPoly m = P(z8, 3, "x^14-1");
        // witness for G_1^2: lift of (x^14-1)/(x^3+x+1)^2 with bits in [0, 2)
        GrPoly ghat = poly_quot(m.project(1), poly_pow(P(z8, 1, "x^3+x+1"), 2));
        CHECK_FALSE(omega_step(f, m, ghat, Int(14), 2));  // order stays 14
        CHECK(omega_step(f, m, ghat, Int(14), 3));        // order becomes 28
        CHECK_THROWS_AS(omega_step(f, m, ghat, Int(14), 1), std::invalid_argument);
    }
}
