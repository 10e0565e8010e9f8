#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agcodes/laurent.hpp"
#include "agcodes/parse.hpp"

#include "support.hpp"

using namespace agcodes;
using testsupport::Rng;

TEST_CASE("valuation of rational functions at finite places and infinity") {
    FieldRef F = Field::gf(5);
    Polynomial x = Polynomial::x(F);
    RationalFunction f(x * x, x + Polynomial::constant(F, 1));
    CHECK(*valuation(f, Place::rational_point(F, 0)) == 2);
    CHECK(*valuation(f, Place::rational_point(F, 4)) == -1);  // x = -1
    CHECK(*valuation(f, Place::infinity(F)) == -1);           // deg num - deg den = 1
    CHECK(!valuation(RationalFunction::zero(F), Place::infinity(F)).has_value());
}

TEST_CASE("expansion of 1/(x+1) at the place x over GF(5)") {
    FieldRef F = Field::gf(5);
    Polynomial x = Polynomial::x(F);
    RationalFunction f(Polynomial::constant(F, 1), x + Polynomial::constant(F, 1));
    LaurentSeries s = LaurentSeries::expand(f, Place::rational_point(F, 0), 4);
    // 1/(1+x) = 1 - x + x^2 - x^3 + .. = 1 + 4x + x^2 + 4x^3
    CHECK(s.valuation() == 0);
    CHECK(s.digit(0) == 1);
    CHECK(s.digit(1) == 4);
    CHECK(s.digit(2) == 1);
    CHECK(s.digit(3) == 4);
}

TEST_CASE("expansion at a degree-2 place is multiplicative") {
    FieldRef F = Field::gf(2);
    Polynomial x = Polynomial::x(F);
    Polynomial one = Polynomial::constant(F, 1);
    Place p = Place::finite(x * x + x + one);
    Rng rng(7);
    for (int t = 0; t < 25; ++t) {
        RationalFunction a = testsupport::random_rational(F, rng, 3);
        RationalFunction b = testsupport::random_rational(F, rng, 3);
        if (a.is_zero() || b.is_zero()) continue;
        LaurentSeries sa = LaurentSeries::expand(a, p, 5);
        LaurentSeries sb = LaurentSeries::expand(b, p, 5);
        LaurentSeries sab = LaurentSeries::expand(a * b, p, 5);
        LaurentSeries prod = sa * sb;
        for (long k = prod.valuation_lower_bound(); k < prod.precision_end(); ++k)
            CHECK(prod.digit(k) == sab.digit(k));
    }
}

TEST_CASE("expansion at infinity uses 1/x as uniformizer") {
    FieldRef F = Field::gf(3);
    Polynomial x = Polynomial::x(F);
    RationalFunction f(x * x + Polynomial::constant(F, 1), x);
    LaurentSeries s = LaurentSeries::expand(f, Place::infinity(F), 4);
    // (x^2+1)/x = t^-1 + t at t = 1/x
    CHECK(s.valuation() == -1);
    CHECK(s.digit(-1) == 1);
    CHECK(s.digit(0) == 0);
    CHECK(s.digit(1) == 1);
    CHECK(s.digit(2) == 0);
}

TEST_CASE("series addition is digit-wise with window intersection") {
    FieldRef F = Field::gf(5);
    Place p = Place::rational_point(F, 0);
    Polynomial x = Polynomial::x(F);
    RationalFunction a(Polynomial::constant(F, 1), x);            // 1/x
    RationalFunction b(Polynomial::constant(F, 4), x);            // 4/x
    LaurentSeries sa = LaurentSeries::expand(a, p, 6);
    LaurentSeries sb = LaurentSeries::expand(b, p, 3);
    LaurentSeries sum = sa + sb;
    CHECK_THROWS_AS(sum.valuation(), precision_error);  // zero to finite precision
    CHECK(sum.precision_end() == 2);                    // min(-1+6, -1+3)
    for (long k = -1; k < 2; ++k) CHECK(sum.digit(k) == 0);
}

TEST_CASE("inverse round trips and respects digit budgets") {
    FieldRef F = Field::gf(4);
    Rng rng(11);
    std::vector<Place> pool = testsupport::place_pool(F);
    for (const Place& p : pool) {
        for (int t = 0; t < 10; ++t) {
            RationalFunction a = testsupport::random_rational(F, rng, 2);
            if (a.is_zero()) continue;
            LaurentSeries s = LaurentSeries::expand(a, p, 5);
            LaurentSeries inv = s.inverse();
            LaurentSeries prod = s * inv;
            CHECK(prod.valuation() == 0);
            CHECK(prod.digit(0) == 1);
            for (long k = 1; k < prod.precision_end(); ++k) CHECK(prod.digit(k) == 0);
        }
    }
}

TEST_CASE("exact zero versus zero-to-precision") {
    FieldRef F = Field::gf(2);
    Place p = Place::rational_point(F, 0);
    LaurentSeries z = LaurentSeries::zero(p);
    CHECK(z.is_exact_zero());
    LaurentSeries zp = LaurentSeries::zero_to_precision(p, 5);
    CHECK_FALSE(zp.is_exact_zero());
    CHECK_THROWS_AS(zp.valuation(), precision_error);
    CHECK((z + zp).precision_end() == 5);
}

TEST_CASE("shift moves the valuation without touching digits") {
    FieldRef F = Field::gf(5);
    Place p = Place::rational_point(F, 2);
    RationalFunction a = parse_rational("(x^2+3)/(x+1)", F);
    LaurentSeries s = LaurentSeries::expand(a, p, 4);
    LaurentSeries sh = s.shifted(3);
    CHECK(*sh.valuation() == *s.valuation() + 3);
    for (long k = *s.valuation(); k < s.precision_end(); ++k)
        CHECK(s.digit(k) == sh.digit(k + 3));
}

TEST_CASE("truncation throws rather than silently degrading") {
    FieldRef F = Field::gf(3);
    Place p = Place::rational_point(F, 0);
    Polynomial x = Polynomial::x(F);
    RationalFunction f(Polynomial::constant(F, 1), x + Polynomial::constant(F, 1));
    LaurentSeries s = LaurentSeries::expand(f, p, 3);
    CHECK_THROWS_AS(s.digit(5), precision_error);  // beyond the known window
    CHECK(s.digit(2) == 1);                        // inside is fine: 1/(1+x) = 1+2x+x^2+..
}
