#pragma once

#include <cstdint>
#include <string>

namespace rgc {

/// Sign/mantissa/decadic-exponent triple.  Represents magnitudes far
/// outside the native double range (e.g. 1e-2792) exactly enough for
/// 10-digit table work.  Canonical form: sign in {-1,0,+1}; for nonzero
/// values the mantissa lies in [1,10); zero is always (0, 0, 0).
struct ScaledReal {
    int sign = 0;
    double mantissa = 0.0;
    std::int64_t exponent = 0;
};

/// Build a canonical ScaledReal from a sign and log10 of the magnitude.
/// sign 0 yields the canonical zero regardless of log10_magnitude.
ScaledReal scaled_from_log10(int sign, double log10_magnitude);

/// Decompose a native double (exact up to mantissa rounding ~2 ulp).
ScaledReal scaled_from_double(double v);

/// log10 of |x|; -infinity for the canonical zero.
double scaled_log10_abs(const ScaledReal& x);

/// Convert to native double.  Underflow returns signed zero (query the
/// two-argument overload for the flag); overflow throws OverflowError.
double scaled_to_native(const ScaledReal& x);
double scaled_to_native(const ScaledReal& x, bool& underflowed);

/// |x - y| / |y| evaluated in log space so that widely separated
/// magnitudes never underflow.  Opposite signs give 1 + |x|/|y|;
/// exponent gaps beyond native precision short-circuit to the ratio.
/// y must be nonzero (UndefinedComparisonError otherwise).
double scaled_relative_error(const ScaledReal& x, const ScaledReal& y);

bool scaled_is_canonical(const ScaledReal& x);

/// Render as "+m.dddddddddE-eee" with `digits` significant digits.
std::string format_scaled(const ScaledReal& x, int digits = 10);

}  // namespace rgc
