#include "rgc/special.hpp"

#include <array>
#include <cmath>
#include <string>

#include "rgc/errors.hpp"

namespace rgc {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kInvE = 0.36787944117144232159552377016146087;  // 1/e
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;

bool is_nonpositive_real_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// ---------------------------------------------------------------------
// Lambert W

Complex halley_seed(int k, Complex z) {
    // Branch-point series around z = -1/e for the two branches that meet
    // there.  p is the principal root for W0, its negative for W_{-1}.
    Complex p2 = 2.0 * (std::exp(1.0) * z + 1.0);
    if ((k == 0 || k == -1) && std::abs(p2) < 0.8) {
        Complex p = std::sqrt(p2);
        if (k == -1) p = -p;
        return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
    }
    if (k == 0 && std::abs(z) < 0.3) {
        // Maclaurin series of W0
        return z * (1.0 + z * (-1.0 + z * (1.5 - (8.0 / 3.0) * z)));
    }
    if (k == -1 && z.imag() == 0.0 && z.real() > -kInvE && z.real() < 0.0) {
        // real branch -1: W ~ ln(-z) - ln(-ln(-z))
        double l = std::log(-z.real());
        return {l - std::log(-l), 0.0};
    }
    Complex l1 = std::log(z) + Complex(0.0, kTwoPi * k);
    return l1 - std::log(l1);
}

Complex halley_lambert(int k, Complex z, double tol, Complex w) {
    double bound = tol * std::fmax(1.0, std::abs(z));
    double resid = 0.0;
    for (int it = 0; it < 50; ++it) {
        Complex ew = std::exp(w);
        Complex f = w * ew - z;
        resid = std::abs(f);
        if (resid <= bound) return w;
        Complex wp1 = w + 1.0;
        Complex den = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        if (den == Complex(0.0, 0.0)) den = ew * wp1 + 1e-30;
        w -= f / den;
    }
    throw ConvergenceError("lambert_w: no convergence for branch " + std::to_string(k),
                           resid);
}

}  // namespace

Complex lambert_w_asymptotic_init(int k, Complex z) {
    if (z == Complex(0.0, 0.0) || std::abs(z) <= 3.0)
        throw SeedOutOfRegimeError("lambert_w_asymptotic_init: requires |z| > 3");
    Complex l1 = std::log(z) + Complex(0.0, kTwoPi * k);
    return l1 - std::log(l1);
}

Complex lambert_w(int k, Complex z, double tol) {
    if (tol < 1e-15 || tol > 1e-6)
        throw DomainError("lambert_w: tol outside [1e-15, 1e-6]");
    if (z == Complex(0.0, 0.0)) {
        if (k == 0) return {0.0, 0.0};
        throw DomainError("lambert_w: z = 0 is a singularity of branch " +
                          std::to_string(k));
    }
    Complex w = halley_lambert(k, z, tol, halley_seed(k, z));
    // keep the real branches real
    if (z.imag() == 0.0 && (k == 0 || k == -1)) {
        bool real_regime = (k == 0) ? z.real() >= -kInvE
                                    : (z.real() >= -kInvE && z.real() < 0.0);
        if (real_regime && std::fabs(w.imag()) < 1e-7) w = {w.real(), 0.0};
    }
    return w;
}

Complex lambert_w_lower_cut(int k, double x, double tol) {
    if (!(x < 0.0)) throw DomainError("lambert_w_lower_cut: requires x < 0");
    if (tol < 1e-15 || tol > 1e-6)
        throw DomainError("lambert_w_lower_cut: tol outside [1e-15, 1e-6]");
    if (k == -1 && x >= -kInvE)
        return lambert_w(-1, Complex(x, 0.0), tol);
    Complex l1 = Complex(std::log(-x), -kPi) + Complex(0.0, kTwoPi * (k + 1));
    Complex seed = l1 - std::log(l1);
    Complex p2 = 2.0 * (std::exp(1.0) * x + 1.0);
    if ((k == 0 || k == -1) && std::abs(p2) < 0.8) {
        Complex p = std::sqrt(p2);   // p2 < 0 here, root on the +i axis
        if (k == -1) p = -p;
        seed = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
    }
    return halley_lambert(k, Complex(x, 0.0), tol, seed);
}

// ---------------------------------------------------------------------
// log Gamma

namespace {

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey's set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// valid for Re z >= 0.5
Complex lanczos_log_gamma(Complex z) {
    Complex s = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i)
        s += kLanczos[i] / (z + static_cast<double>(i - 1));
    Complex base = z + (kLanczosG - 0.5);
    return (z - 0.5) * std::log(base) - base + kHalfLog2Pi + std::log(s);
}

// log(sin(pi z)) on a branch consistent under exp(); for Im z > 0 the
// stable form sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}) avoids
// overflow in e^{pi |Im z|}.
Complex log_sin_pi(Complex z) {
    double y = z.imag();
    if (y == 0.0) {
        double x = z.real();
        double m = std::floor(x);
        double v = std::sin(kPi * (x - m));
        if (std::fmod(m, 2.0) != 0.0) v = -v;
        return std::log(Complex(v, 0.0));
    }
    if (y > 0.0) {
        Complex corr = std::log(1.0 - std::exp(Complex(0.0, kTwoPi) * z));
        return Complex(-std::log(2.0), kPi / 2.0) - Complex(0.0, kPi) * z + corr;
    }
    return std::conj(log_sin_pi(std::conj(z)));
}

}  // namespace

Complex log_gamma(Complex z) {
    if (is_nonpositive_real_integer(z))
        throw PoleError("log_gamma: pole at z = " + std::to_string(z.real()));
    if (z.real() >= 0.5) return lanczos_log_gamma(z);
    // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
    return std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

Complex reciprocal_gamma(Complex z) {
    if (is_nonpositive_real_integer(z)) return {0.0, 0.0};
    return std::exp(-log_gamma(z));
}

// ---------------------------------------------------------------------
// zeta at integers: direct sum to N = 20 plus Euler-Maclaurin tail with
// Bernoulli corrections through B12.  The first omitted term is below
// |B14|/(14)! * (k)_13 * 20^{-k-13} < 4e-20 for every k >= 2.

double zeta_int(int k) {
    if (k < 2) throw DomainError("zeta_int: requires k >= 2");
    constexpr int kCutoff = 20;
    constexpr std::array<double, 6> kBernoulli = {
        1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0};
    double kk = static_cast<double>(k);
    double s = 1.0;
    for (int j = kCutoff - 1; j >= 2; --j) s += std::pow(j, -kk);
    double n = static_cast<double>(kCutoff);
    double tail = std::pow(n, 1.0 - kk) / (kk - 1.0) + 0.5 * std::pow(n, -kk);
    double fact = 1.0;   // (2m)!
    double rising = 1.0; // k (k+1) ... (k+2m-2)
    for (int m = 1; m <= 6; ++m) {
        fact *= (2 * m) * (2 * m - 1);
        rising *= (m == 1) ? kk : (kk + 2 * m - 3) * (kk + 2 * m - 2);
        tail += kBernoulli[m - 1] / fact * rising * std::pow(n, -(kk + 2 * m - 1.0));
    }
    return s + tail;
}

double log_factorial(long long n) {
    if (n < 0) throw DomainError("log_factorial: requires n >= 0");
    // 0!..20! are exactly representable doubles
    static constexpr std::array<double, 21> kFact = {
        1.0, 1.0, 2.0, 6.0, 24.0, 120.0, 720.0, 5040.0, 40320.0, 362880.0,
        3628800.0, 39916800.0, 479001600.0, 6227020800.0, 87178291200.0,
        1307674368000.0, 20922789888000.0, 355687428096000.0,
        6402373705728000.0, 121645100408832000.0, 2432902008176640000.0};
    if (n <= 20) return std::log(kFact[static_cast<std::size_t>(n)]);
    return lanczos_log_gamma(Complex(static_cast<double>(n) + 1.0, 0.0)).real();
}

}  // namespace rgc
