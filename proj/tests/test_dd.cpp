#include <doctest.h>

#include <cmath>
#include <initializer_list>

#include "rgc/dd.hpp"

using namespace rgc;

namespace {

// |a - b| in dd, relative to |b|
double dd_rel(const DD& a, const DD& b) {
    DD d = dd_sub(a, b);
    return std::fabs(d.value()) / std::fabs(b.value());
}

}  // namespace

TEST_CASE("dd primitives are error-free on representable cases") {
    DD s = dd_add(DD{1e20}, DD{1.0});
    DD d = dd_sub(s, DD{1e20});
    CHECK(d.hi == 1.0);
    CHECK(d.lo == 0.0);

    DD t = dd_mul(DD{3.0}, DD{7.0});
    CHECK(t.hi == 21.0);
    CHECK(t.lo == 0.0);

    // cancellation keeps the compensation term
    DD x = dd_add(DD{1.0, 1e-17}, DD{-1.0, 2e-17});
    CHECK(x.value() == doctest::Approx(3e-17).epsilon(1e-12));
}

TEST_CASE("dd_mul reaches double-double precision") {
    // reference pair computed with 50-digit arithmetic
    DD pi2_ref{9.869604401089358, 6.265295508739711e-16};
    DD pi2 = dd_mul(dd_pi, dd_pi);
    CHECK(dd_rel(pi2, pi2_ref) < 1e-30);
}

TEST_CASE("dd_exp against high-precision reference pairs") {
    struct Row {
        double arg;
        DD expected;
    };
    static const Row rows[] = {
        {-30.25, {7.287724095819692e-14, 2.3339070041631973e-30}},
        {-1.5, {0.22313016014842982, 1.0887723699042263e-17}},
        {0.3125, {1.3668379411737963, 5.1449446596411544e-17}},
        {-152.0, {9.710436457780846e-67, 4.796155232962253e-83}},
        {3.75, {42.52108200006278, -3.2371687033598516e-16}},
        {-0.0001220703125, {0.9998779371377774, 4.625906682185762e-17}},
    };
    for (const Row& r : rows) {
        DD e = dd_exp(DD{r.arg});
        CAPTURE(r.arg);
        CHECK(dd_rel(e, r.expected) < 5e-30);
    }
    CHECK(dd_exp(DD{-800.0}).value() == 0.0);
}

TEST_CASE("ddc_pow against high-precision reference") {
    DDComplex p = ddc_pow(DDComplex{DD{-30.25}, dd_neg(dd_pi)}, 30u);
    DD re_ref{-3.0999091824303084e+44, -8.071821854757848e+27};
    DD im_ref{1.1503791477283785e+43, 3.7722317037264217e+25};
    CHECK(dd_rel(p.re, re_ref) < 1e-29);
    CHECK(dd_rel(p.im, im_ref) < 1e-29);

    DDComplex one = ddc_pow(DDComplex{DD{2.0}, DD{3.0}}, 0u);
    CHECK(one.re.value() == 1.0);
    CHECK(one.im.value() == 0.0);
}

TEST_CASE("dd_exp functional identity exp(a)*exp(-a) = 1") {
    for (double a : {-200.0, -17.25, -0.5, 0.875, 41.0}) {
        DD prod = dd_mul(dd_exp(DD{a}), dd_exp(DD{-a}));
        CHECK(std::fabs(prod.value() - 1.0) < 1e-29);
    }
}
