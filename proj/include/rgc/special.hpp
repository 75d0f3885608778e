#pragma once

#include <complex>

namespace rgc {

using Complex = std::complex<double>;

/// Leading asymptotic seed for W_k(z): (Log z + 2*pi*i*k) - log(Log z + 2*pi*i*k),
/// with the principal logarithm.  Intended purely as an iteration start;
/// accuracy is O(log log|z| / log|z|).  Requires |z| > 3.
Complex lambert_w_asymptotic_init(int k, Complex z);

/// Branch-k Lambert W by Halley iteration.  The result w satisfies
/// |w e^w - z| <= tol * max(1, |z|).  On the negative real axis the value
/// is the counterclockwise-continuous one (limit from above).  For real
/// z in (-1/e, 0) branches 0 and -1 return real values.
Complex lambert_w(int k, Complex z, double tol = 1e-13);

/// W_k on the negative real axis under the arg(z) = -pi labeling used by
/// saddle-point work: branches are indexed so that k = -1 is continuous
/// with the real branch on (-1/e, 0) and has Im w in (-pi, 0) for
/// x < -1/e.  Distinct from lambert_w so the convention stays explicit.
Complex lambert_w_lower_cut(int k, double x, double tol = 1e-13);

/// Principal-branch log Gamma, continuous on the cut plane and real on
/// the positive reals.  Absolute error stays below 1e-12 for |z| <= 1e3
/// (grows ~linearly with |z| log|z| beyond).  Nonpositive real integers
/// throw PoleError.
Complex log_gamma(Complex z);

/// 1/Gamma(z); entire, with Gamma poles mapped to exact zero.
Complex reciprocal_gamma(Complex z);

/// Riemann zeta at integer k >= 2; absolute error < 1e-15.
double zeta_int(int k);

/// ln(n!) for n >= 0; exact products through n = 20, Lanczos beyond.
double log_factorial(long long n);

}  // namespace rgc
