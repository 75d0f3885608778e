#include <doctest.h>

#include <cmath>
#include <random>

#include "rgc/errors.hpp"
#include "rgc/scaled_real.hpp"

using namespace rgc;

TEST_CASE("scaled_from_log10 basics") {
    // log10(7.415156531e-12), target mantissa from the n=20 asymptotic value
    ScaledReal x = scaled_from_log10(1, std::log10(7.415156531) - 12.0);
    CHECK(x.sign == 1);
    CHECK(x.exponent == -12);
    CHECK(x.mantissa == doctest::Approx(7.415156531).epsilon(1e-12));

    ScaledReal z = scaled_from_log10(0, 123.0);
    CHECK(z.sign == 0);
    CHECK(z.mantissa == 0.0);
    CHECK(z.exponent == 0);

    ScaledReal one = scaled_from_log10(1, 0.0);
    CHECK(one.mantissa == 1.0);
    CHECK(one.exponent == 0);

    CHECK_THROWS_AS(scaled_from_log10(1, std::nan("")), DomainError);
    CHECK_THROWS_AS(scaled_from_log10(3, 1.0), DomainError);
}

TEST_CASE("scaled_to_native") {
    ScaledReal g{1, 5.772156649, -1};
    CHECK(scaled_to_native(g) == doctest::Approx(0.5772156649).epsilon(1e-12));

    CHECK(scaled_to_native(ScaledReal{}) == 0.0);

    bool under = false;
    double v = scaled_to_native(ScaledReal{-1, 6.074000773, -2792}, under);
    CHECK(under);
    CHECK(v == 0.0);
    CHECK(std::signbit(v));

    CHECK_THROWS_AS(scaled_to_native(ScaledReal{1, 1.0, 400}), OverflowError);
}

TEST_CASE("scaled_relative_error") {
    ScaledReal a{1, 6.599969140, -106};
    ScaledReal b{1, 6.6158100911, -106};
    CHECK(scaled_relative_error(a, b) == doctest::Approx(0.002395).epsilon(2e-3));

    ScaledReal c{-1, 2.4878383, -2};
    ScaledReal d{-1, 4.2002635, -2};
    CHECK(scaled_relative_error(c, d) == doctest::Approx(0.4077).epsilon(1e-3));

    CHECK(scaled_relative_error(a, a) == 0.0);
    CHECK_THROWS_AS(scaled_relative_error(a, ScaledReal{}), UndefinedComparisonError);

    // opposite signs: 1 + |x|/|y|
    ScaledReal e{-1, 6.6, -106};
    CHECK(scaled_relative_error(e, b) > 1.0);

    // huge exponent gap short-circuits
    ScaledReal tiny{1, 1.0, -500};
    ScaledReal big{1, 1.0, 500};
    CHECK(scaled_relative_error(tiny, big) == 1.0);
    CHECK(scaled_relative_error(big, tiny) > 1e100);
}

TEST_CASE("round trip and canonicalization properties") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> um(-300.0, 300.0);
    std::bernoulli_distribution flip;
    for (int i = 0; i < 2000; ++i) {
        double v = (flip(rng) ? 1.0 : -1.0) * std::pow(10.0, um(rng));
        ScaledReal s = scaled_from_double(v);
        CHECK(scaled_is_canonical(s));
        double back = scaled_to_native(s);
        CHECK(std::fabs(back - v) <= 1e-12 * std::fabs(v));

        ScaledReal s2 = scaled_from_log10(s.sign, scaled_log10_abs(s));
        CHECK(scaled_is_canonical(s2));
        CHECK(s2.exponent == s.exponent);
        CHECK(s2.mantissa == doctest::Approx(s.mantissa).epsilon(1e-13));
    }
}

TEST_CASE("relative error symmetry under joint sign flips") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> um(-50.0, 50.0);
    for (int i = 0; i < 300; ++i) {
        ScaledReal x = scaled_from_log10(1, um(rng));
        ScaledReal y = scaled_from_log10(1, um(rng));
        ScaledReal xm = x, ym = y;
        xm.sign = -1;
        ym.sign = -1;
        CHECK(scaled_relative_error(x, y) == scaled_relative_error(xm, ym));
    }
}

TEST_CASE("text rendering") {
    CHECK(format_scaled(ScaledReal{1, 7.415156531, -12}) == "+7.415156531E-12");
    CHECK(format_scaled(ScaledReal{-1, 6.074000773, -2792}) == "-6.074000773E-2792");
    CHECK(format_scaled(ScaledReal{1, 1.0, 0}) == "+1.000000000E0");
    CHECK(format_scaled(ScaledReal{}) == "+0.000000000E0");
    CHECK(format_scaled(ScaledReal{-1, 2.5, 3}, 3) == "-2.50E3");
    // mantissa that rounds up into the next decade
    CHECK(format_scaled(ScaledReal{1, 9.99999999999, 5}, 6) == "+1.00000E6");
}
