#include <doctest.h>

#include "util.hpp"

using namespace tutil;

namespace {

// Power-series inverse of a unit polynomial mod x^terms.
GrPoly series_inverse(const GrPoly& f, int terms) {
    auto spec = f.spec();
    const int eps = f.precision();
    std::vector<GrElem> inv{f.coeff(0).inv()};
    for (int k = 1; k < terms; ++k) {
        GrElem acc = GrElem::zero(spec, eps);
        for (int j = 1; j <= k; ++j) acc = acc + f.coeff(j) * inv[static_cast<size_t>(k - j)];
        inv.push_back(-(inv[0] * acc));
    }
    return GrPoly::from_elems(inv);
}

}  // namespace

TEST_SUITE("poly") {
    TEST_CASE("basic products") {
        auto f2 = zp(2, 1);
        CHECK(P(f2, 1, "x+1") * P(f2, 1, "x+1") == P(f2, 1, "x^2+1"));
        CHECK((P(f2, 1, "x^3+x") * GrPoly::zero(f2, 1)).is_zero());
    }

    TEST_CASE("divmod") {
        auto f2 = zp(2, 1);
        GrPoly m = P(f2, 1, "x^14-1");
        auto [q, r] = poly_divmod(m, P(f2, 1, "x^2+1"));  // (x+1)^2 over F_2
        CHECK(r.is_zero());
        CHECK(q * P(f2, 1, "x^2+1") == m);

        GrPoly a = P(f2, 1, "x^5+x^2+1");
        auto [q2, r2] = poly_divmod(a, a);
        CHECK(q2 == GrPoly::one(f2, 1));
        CHECK(r2.is_zero());
    }

    TEST_CASE("divmod recombination at every precision") {
        auto spec = zp(3, 3);
        std::mt19937_64 rng(31);
        for (int eps = 1; eps <= 3; ++eps) {
            for (int i = 0; i < 300; ++i) {
                GrPoly a = random_poly(spec, eps, rng, 1 + static_cast<int>(rng() % 12));
                GrPoly b = random_poly(spec, eps, rng, 1 + static_cast<int>(rng() % 6), true);
                auto [q, r] = poly_divmod(a, b);
                CHECK(q * b + r == a);
                CHECK(r.degree() < b.degree());
            }
        }
    }

    TEST_CASE("divmod with unit leading coefficient") {
        auto z9 = zp(3, 2);
        std::mt19937_64 rng(37);
        for (int i = 0; i < 100; ++i) {
            GrPoly a = random_poly(z9, 2, rng, 8);
            GrPoly b = random_poly(z9, 2, rng, 3);
            if (b.is_zero() || !b.leading().is_unit()) continue;
            auto [q, r] = poly_divmod(a, b);
            CHECK(q * b + r == a);
        }
        // zero-divisor leading coefficient rejected
        GrPoly bad = P(z9, 2, "3*x^2+1");
        CHECK_THROWS_AS(poly_divmod(P(z9, 2, "x^4"), bad), std::domain_error);
        CHECK_THROWS_AS(poly_divmod(P(z9, 2, "x^4"), GrPoly::zero(z9, 2)), std::domain_error);
    }

    TEST_CASE("mod_pow") {
        auto f2 = zp(2, 1);
        GrPoly g = P(f2, 1, "x^3+x+1");
        CHECK(mod_pow(P(f2, 1, "x^5+x"), Int(0), g) == GrPoly::one(f2, 1));
        CHECK(mod_pow(P(f2, 1, "x"), Int(7), g) == GrPoly::one(f2, 1));

        auto z25 = zp(5, 2);
        std::mt19937_64 rng(41);
        GrPoly m = random_poly(z25, 2, rng, 5, true);
        for (int i = 0; i < 50; ++i) {
            GrPoly f = random_poly(z25, 2, rng, 4);
            uint64_t ka = rng() % 40, kb = rng() % 40;
            GrPoly lhs = mod_pow(f, Int(ka + kb), m);
            GrPoly rhs = poly_rem(mod_pow(f, Int(ka), m) * mod_pow(f, Int(kb), m), m);
            CHECK(lhs == rhs);
            // agree with naive repeated multiplication
            GrPoly naive = GrPoly::one(z25, 2);
            for (uint64_t j = 0; j < ka % 16; ++j) naive = poly_rem(naive * f, m);
            CHECK(mod_pow(f, Int(ka % 16), m) == naive);
        }
    }

    TEST_CASE("classification") {
        auto z4 = zp(2, 2);
        CHECK(classify(P(z4, 2, "2*x+2")) == RegularityClass::zero_divisor);
        CHECK(classify(P(z4, 2, "2*x+3")) == RegularityClass::unit);
        CHECK(classify(P(z4, 2, "x+2")) == RegularityClass::regular_non_unit);
        CHECK(classify(GrPoly::zero(z4, 2)) == RegularityClass::zero_divisor);

        // units admit a power series inverse
        GrPoly u = P(z4, 2, "2*x^2+2*x+1");
        REQUIRE(classify(u) == RegularityClass::unit);
        GrPoly inv = series_inverse(u, u.degree() + 1);
        GrPoly prod = u * inv;
        for (int k = 0; k <= u.degree(); ++k)
            CHECK(prod.coeff(k) == (k == 0 ? GrElem::one(z4, 2) : GrElem::zero(z4, 2)));
    }

    TEST_CASE("field gcd") {
        auto f2 = zp(2, 1);
        auto [g, u, v] = field_gcd_ext(P(f2, 1, "x^3+x+1"), P(f2, 1, "x^3+x^2+1"));
        CHECK(g == GrPoly::one(f2, 1));
        CHECK(u * P(f2, 1, "x^3+x+1") + v * P(f2, 1, "x^3+x^2+1") == g);

        GrPoly a = P(f2, 1, "x^4+x");
        auto [g2, u2, v2] = field_gcd_ext(a, GrPoly::zero(f2, 1));
        CHECK(g2 == a);  // already monic

        auto f5 = zp(5, 1);
        std::mt19937_64 rng(43);
        for (int i = 0; i < 200; ++i) {
            GrPoly x = random_poly(f5, 1, rng, static_cast<int>(rng() % 9));
            GrPoly y = random_poly(f5, 1, rng, static_cast<int>(rng() % 9));
            if (x.is_zero() && y.is_zero()) continue;
            auto [gg, uu, vv] = field_gcd_ext(x, y);
            CHECK(uu * x + vv * y == gg);
            CHECK(gg.leading() == GrElem::one(f5, 1));
        }
        CHECK_THROWS_AS(field_gcd_ext(P(zp(2, 2), 2, "x"), P(zp(2, 2), 2, "x+1")),
                        std::invalid_argument);
    }

    TEST_CASE("karatsuba agrees with naive product") {
        std::mt19937_64 rng(47);
        for (auto spec : {zp(2, 1), zp(3, 2), gr(2, 2, 1)}) {
            const int eps = spec->e();
            for (int trial = 0; trial < 4; ++trial) {
                GrPoly a = random_poly(spec, eps, rng, 150 + static_cast<int>(rng() % 40));
                GrPoly b = random_poly(spec, eps, rng, 90 + static_cast<int>(rng() % 80));
                CHECK(a * b == naive_mul(a, b));
            }
        }
    }

    TEST_CASE("text round trip") {
        auto z8 = zp(2, 3);
        CHECK(print_poly(P(z8, 3, "x^14-1")) == "x^14+7");
        CHECK(P(z8, 3, "x^14-1") == P(z8, 3, "x^14+7"));
        CHECK(print_poly(GrPoly::zero(z8, 3)) == "0");
        CHECK(parse_poly(z8, 3, "0").is_zero());

        auto g = gr(2, 2, 1);
        GrPoly witht = P(g, 1, "[t+1]*x^2+[t]");
        CHECK(parse_poly(g, 1, print_poly(witht)) == witht);

        std::mt19937_64 rng(53);
        for (auto spec : {zp(5, 2), gr(3, 2, 2)}) {
            for (int i = 0; i < 200; ++i) {
                GrPoly f = random_poly(spec, 2, rng, static_cast<int>(rng() % 10));
                CHECK(parse_poly(spec, 2, print_poly(f)) == f);
            }
        }
        CHECK_THROWS_AS(parse_poly(z8, 3, "x^2 + + 1"), std::invalid_argument);
        CHECK_THROWS_AS(parse_poly(z8, 3, ""), std::invalid_argument);
        CHECK_THROWS_AS(parse_poly(z8, 3, "y+1"), std::invalid_argument);
    }

    TEST_CASE("precision and spec mismatch") {
        auto z4 = zp(2, 2);
        CHECK_THROWS_AS(P(z4, 2, "x") + P(z4, 1, "x"), std::invalid_argument);
        CHECK_THROWS_AS(P(z4, 2, "x") * P(zp(3, 2), 2, "x"), std::invalid_argument);
    }
}
