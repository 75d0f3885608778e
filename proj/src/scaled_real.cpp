#include "rgc/scaled_real.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "rgc/errors.hpp"

namespace rgc {

namespace {

ScaledReal normalized(int sign, double mantissa, std::int64_t exponent) {
    while (mantissa >= 10.0) {
        mantissa /= 10.0;
        ++exponent;
    }
    while (mantissa < 1.0) {
        mantissa *= 10.0;
        --exponent;
    }
    return {sign, mantissa, exponent};
}

}  // namespace

ScaledReal scaled_from_log10(int sign, double log10_magnitude) {
    if (sign == 0) return {};
    if (sign != 1 && sign != -1)
        throw DomainError("scaled_from_log10: sign must be -1, 0 or +1");
    if (!std::isfinite(log10_magnitude))
        throw DomainError("scaled_from_log10: non-finite magnitude with nonzero sign");
    double e = std::floor(log10_magnitude);
    double m = std::pow(10.0, log10_magnitude - e);
    return normalized(sign, m, static_cast<std::int64_t>(e));
}

ScaledReal scaled_from_double(double v) {
    if (v == 0.0) return {};
    if (!std::isfinite(v)) throw DomainError("scaled_from_double: non-finite value");
    int sign = v > 0.0 ? 1 : -1;
    double av = std::fabs(v);
    auto e = static_cast<std::int64_t>(std::floor(std::log10(av)));
    double m = av * std::pow(10.0, static_cast<double>(-e));
    return normalized(sign, m, e);
}

double scaled_log10_abs(const ScaledReal& x) {
    if (x.sign == 0) return -std::numeric_limits<double>::infinity();
    return static_cast<double>(x.exponent) + std::log10(x.mantissa);
}

double scaled_to_native(const ScaledReal& x) {
    bool dummy = false;
    return scaled_to_native(x, dummy);
}

double scaled_to_native(const ScaledReal& x, bool& underflowed) {
    underflowed = false;
    if (x.sign == 0) return 0.0;
    double l10 = scaled_log10_abs(x);
    if (l10 > 308.4)
        throw OverflowError("scaled_to_native: exponent " + std::to_string(x.exponent) +
                            " exceeds the native range");
    double v = x.mantissa * std::pow(10.0, static_cast<double>(x.exponent));
    if (v == 0.0) {
        underflowed = true;
        return x.sign > 0 ? 0.0 : -0.0;
    }
    return x.sign > 0 ? v : -v;
}

double scaled_relative_error(const ScaledReal& x, const ScaledReal& y) {
    if (y.sign == 0)
        throw UndefinedComparisonError("scaled_relative_error: reference value is zero");
    if (x.sign == 0) return 1.0;

    double dlog = scaled_log10_abs(x) - scaled_log10_abs(y);
    if (x.sign != y.sign) {
        // |x - y| = |x| + |y|
        if (dlog > 300.0) return std::numeric_limits<double>::infinity();
        return 1.0 + std::pow(10.0, dlog);
    }
    // same sign: |x/y - 1|
    if (dlog >= 17.0) return std::pow(10.0, std::fmin(dlog, 300.0));
    if (dlog <= -17.0) return 1.0;
    if (x.exponent == y.exponent) return std::fabs(x.mantissa - y.mantissa) / y.mantissa;
    return std::fabs(std::expm1(dlog * std::log(10.0)));
}

bool scaled_is_canonical(const ScaledReal& x) {
    if (x.sign == 0) return x.mantissa == 0.0 && x.exponent == 0;
    if (x.sign != 1 && x.sign != -1) return false;
    return x.mantissa >= 1.0 && x.mantissa < 10.0;
}

std::string format_scaled(const ScaledReal& x, int digits) {
    if (digits < 1) digits = 1;
    if (digits > 17) digits = 17;
    double m = x.mantissa;
    std::int64_t e = x.exponent;
    if (x.sign != 0) {
        // pre-round so a mantissa like 9.9999999997 carries into the exponent
        double scale = std::pow(10.0, digits - 1);
        double r = std::round(m * scale) / scale;
        if (r >= 10.0) {
            r /= 10.0;
            ++e;
        }
        m = r;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%+.*fE%lld", digits - 1,
                  x.sign == 0 ? 0.0 : (x.sign > 0 ? m : -m),
                  static_cast<long long>(x.sign == 0 ? 0 : e));
    return buf;
}

}  // namespace rgc
