#pragma once

#include <cmath>

// Compensated double-double arithmetic (~31 significant decimal digits).
// Only the operations the oscillatory quadrature needs: add, sub, mul,
// exp, and complex multiply/power.  Algorithms are the classic
// error-free transformations (Dekker/Knuth two-sum, FMA two-prod).

namespace rgc {

struct DD {
    double hi = 0.0;
    double lo = 0.0;

    DD() = default;
    constexpr DD(double h) : hi(h), lo(0.0) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

namespace detail {

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double e = (a - (s - bb)) + (b - bb);
    return {s, e};
}

// requires |a| >= |b|
inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

}  // namespace detail

inline DD dd_add(const DD& a, const DD& b) {
    DD s = detail::two_sum(a.hi, b.hi);
    DD t = detail::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = detail::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}

inline DD dd_neg(const DD& a) { return {-a.hi, -a.lo}; }

inline DD dd_sub(const DD& a, const DD& b) { return dd_add(a, dd_neg(b)); }

inline DD dd_mul(const DD& a, const DD& b) {
    DD p = detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul(const DD& a, double b) {
    DD p = detail::two_prod(a.hi, b);
    p.lo += a.lo * b;
    return detail::quick_two_sum(p.hi, p.lo);
}

// exact scaling by a power of two
inline DD dd_ldexp(const DD& a, int e) {
    return {std::ldexp(a.hi, e), std::ldexp(a.lo, e)};
}

inline bool dd_less_abs(const DD& a, double b) { return std::fabs(a.hi) < b; }

inline constexpr DD dd_ln2{0.6931471805599453, 2.3190468138462996e-17};

/// exp with double-double precision; valid for |a| < 700.
inline DD dd_exp(const DD& a) {
    if (a.hi < -745.0) return {0.0, 0.0};
    double k = std::floor(a.hi / dd_ln2.hi + 0.5);
    DD r = dd_sub(a, dd_mul(dd_ln2, k));
    // scale down so the Taylor series reaches full precision quickly; the
    // squaring ladder amplifies series error by 2^kScale, so keep it short
    constexpr int kScale = 4;  // divide by 16
    r = dd_ldexp(r, -kScale);
    // expm1 by Taylor: t + t^2/2! + ... ; |t| <= ln2/32 ~ 0.0217
    static constexpr DD kInvFact[] = {
        {0.5, 0.0},
        {0.16666666666666666, 9.25185853854297e-18},
        {0.041666666666666664, 2.3129646346357427e-18},
        {0.008333333333333333, 1.1564823173178714e-19},
        {0.001388888888888889, -5.300543954373577e-20},
        {0.0001984126984126984, 1.7209558293420705e-22},
        {2.48015873015873e-05, 2.1511947866775882e-23},
        {2.7557319223985893e-06, -1.858393274046472e-22},
        {2.755731922398589e-07, 2.3767714622250297e-23},
        {2.505210838544172e-08, -1.448814070935912e-24},
        {2.08767569878681e-09, -1.20734505911326e-25},
        {1.6059043836821613e-10, 1.2585294588752098e-26},
        {1.1470745597729725e-11, 2.0655512752830745e-28},
        {7.647163731819816e-13, 7.03872877733453e-30},
        {4.779477332387385e-14, 4.399205485834081e-31},
    };
    DD t = r;
    DD sum = r;
    for (const DD& f : kInvFact) {
        t = dd_mul(t, r);
        sum = dd_add(sum, dd_mul(t, f));
    }
    // undo scaling: (1+e) -> (1+e)^2 means e -> 2e + e^2
    for (int i = 0; i < kScale; ++i)
        sum = dd_add(dd_add(sum, sum), dd_mul(sum, sum));
    DD result = dd_add(DD{1.0}, sum);
    return dd_ldexp(result, static_cast<int>(k));
}

/// Complex value with double-double components.
struct DDComplex {
    DD re, im;
};

inline DDComplex ddc_mul(const DDComplex& a, const DDComplex& b) {
    return {dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
            dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

/// integer power by binary exponentiation
inline DDComplex ddc_pow(DDComplex base, unsigned n) {
    DDComplex acc{DD{1.0}, DD{0.0}};
    while (n > 0) {
        if (n & 1u) acc = ddc_mul(acc, base);
        n >>= 1u;
        if (n) base = ddc_mul(base, base);
    }
    return acc;
}

inline constexpr DD dd_pi{3.141592653589793, 1.2246467991473532e-16};

}  // namespace rgc
