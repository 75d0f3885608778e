#include "rgc/methods.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rgc/dd.hpp"
#include "rgc/errors.hpp"

namespace rgc {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kLn10 = 2.302585092994045684017991454684364208;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243104;
constexpr double kDegeneratePhase = 1e-13;

int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

void validate_config(const MethodConfig& cfg) {
    if (!(cfg.quad_rel_tol > 0.0) || cfg.quad_rel_tol > 1e-3)
        throw DomainError("MethodConfig: quad_rel_tol outside (0, 1e-3]");
    if (!(cfg.quad_step > 0.0))
        throw DomainError("MethodConfig: quad_step must be positive");
    if (!(cfg.w_tol > 0.0) || cfg.w_tol > 1e-3)
        throw DomainError("MethodConfig: w_tol outside (0, 1e-3]");
    if (cfg.contour_nodes && *cfg.contour_nodes < 16)
        throw DomainError("MethodConfig: explicit contour_nodes must be >= 16");
    if (cfg.contour_radius && !(*cfg.contour_radius > 0.0))
        throw DomainError("MethodConfig: contour_radius must be positive");
}

double log10_abs_dd(const DD& x) {
    return std::log10(std::fabs(x.hi)) + std::log1p(x.lo / x.hi) / kLn10;
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::bourguet: return "bourguet";
        case Method::cauchy: return "cauchy";
        case Method::integral: return "integral";
        case Method::saddle: return "saddle";
        case Method::hayman: return "hayman";
        case Method::rough: return "rough";
    }
    return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
    for (Method m : {Method::bourguet, Method::cauchy, Method::integral,
                     Method::saddle, Method::hayman, Method::rough})
        if (name == method_name(m)) return m;
    return std::nullopt;
}

const char* phase_variant_name(PhaseVariant v) {
    return v == PhaseVariant::bornemann ? "bornemann" : "hayman";
}

std::optional<PhaseVariant> phase_variant_from_name(std::string_view name) {
    if (name == "bornemann") return PhaseVariant::bornemann;
    if (name == "hayman") return PhaseVariant::hayman;
    return std::nullopt;
}

// ---------------------------------------------------------------------
// Bourguet recursion:  (n-1) a_n = gamma a_{n-1} + sum_{k=2}^{n-1} (-1)^{k+1} zeta(k) a_{n-k}

std::vector<double> bourguet_sequence(int n_max) {
    if (n_max < 1)
        throw DomainError("bourguet_sequence: n_max must be >= 1");
    if (n_max > 60)
        throw DomainError(
            "bourguet_sequence: refused beyond n_max = 60; the recursion has lost "
            "every significant digit well before that point");
    std::vector<double> a(static_cast<std::size_t>(n_max));
    a[0] = 1.0;
    if (n_max >= 2) a[1] = kEulerGamma;
    std::vector<double> zetas(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (int k = 2; k <= n_max - 1; ++k)
        zetas[static_cast<std::size_t>(k)] = zeta_int(k);
    for (int m = 3; m <= n_max; ++m) {
        double s = kEulerGamma * a[static_cast<std::size_t>(m - 2)];
        for (int k = 2; k <= m - 1; ++k) {
            double term = zetas[static_cast<std::size_t>(k)] *
                          a[static_cast<std::size_t>(m - k - 1)];
            s += (k % 2 == 0) ? -term : term;
        }
        a[static_cast<std::size_t>(m - 1)] = s / (m - 1);
    }
    return a;
}

// ---------------------------------------------------------------------
// Integral method

namespace {

// log of the integrand's envelope e^{u - e^u} (u^2 + pi^2)^{n/2}
double log_envelope(double u, int n) {
    return (u - std::exp(u)) + 0.5 * n * std::log(u * u + kPi * kPi);
}

// one integrand sample in double-double: e^{u - e^u} * Im{(u - i pi)^n}
DD integrand_dd(double u, int n) {
    DD eu = dd_exp(DD{u});
    DD weight = dd_exp(dd_sub(DD{u}, eu));
    DDComplex p = ddc_pow(DDComplex{DD{u}, dd_neg(dd_pi)}, static_cast<unsigned>(n));
    return dd_mul(weight, p.im);
}

}  // namespace

CoefficientEstimate integral_coefficient(int n, const MethodConfig& cfg) {
    validate_config(cfg);
    if (n < 1 || n > 40)
        throw DomainError(
            "integral_coefficient: n outside [1, 40]; cancellation in the "
            "oscillatory integrand exceeds working precision beyond the cap");

    // truncation: walk out from the envelope peak until the envelope drops
    // 32 decades (the working precision) below its maximum.  The answer
    // sits up to ~1e19 below the envelope mass, so a shallower cutoff
    // leaves tails of the same order as the result itself.
    const double cut = 32.0 * kLn10;
    double peak_u = 0.0, peak = log_envelope(0.0, n);
    for (double u = -(4.0 * n + 30.0); u <= 6.0; u += 0.5) {
        double le = log_envelope(u, n);
        if (le > peak) {
            peak = le;
            peak_u = u;
        }
    }
    double lo = peak_u, hi = peak_u;
    while (log_envelope(lo, n) > peak - cut) lo -= 1.0;
    while (log_envelope(hi, n) > peak - cut) hi += 0.5;

    // Snap the step to a power of two and the endpoints to its lattice:
    // every node at every refinement level is then an exact double.  The
    // cancellation ratio reaches ~1e19, so even ulp-level node jitter
    // would otherwise drown the result.
    const int kMaxHalvings = 12;
    double h = std::exp2(std::floor(std::log2(cfg.quad_step)));
    lo = h * std::floor(lo / h);
    hi = h * std::ceil(hi / h);
    long m = std::lround((hi - lo) / h);

    // level 0 trapezoid
    DD sum{0.0};
    double abs_sum = 0.0;
    for (long j = 0; j <= m; ++j) {
        DD g = integrand_dd(lo + h * static_cast<double>(j), n);
        if (j == 0 || j == m) g = dd_ldexp(g, -1);
        sum = dd_add(sum, g);
        abs_sum += std::fabs(g.value());
    }
    DD integral = dd_mul(sum, h);

    double rel_change = 1.0;
    double noise_floor = 0.0;
    long nodes = m + 1;
    bool converged = false;
    for (int level = 1; level <= kMaxHalvings; ++level) {
        // refine by sampling the midpoints of the current grid
        DD mid{0.0};
        for (long j = 0; j < m; ++j) {
            DD g = integrand_dd(lo + h * (static_cast<double>(j) + 0.5), n);
            mid = dd_add(mid, g);
            abs_sum += std::fabs(g.value());
        }
        DD refined = dd_add(dd_ldexp(integral, -1), dd_mul(mid, 0.5 * h));
        m *= 2;
        h *= 0.5;
        nodes = m + 1;

        rel_change = std::fabs(dd_sub(refined, integral).value() / refined.value());
        integral = refined;
        // cancellation-aware noise floor: the summands carry ~2.5e-32
        // relative noise each, amplified by the cancellation ratio
        double kappa = abs_sum * h / std::fabs(integral.value());
        noise_floor = 8.0 * 2.5e-32 * kappa;
        if (rel_change <= std::fmax(cfg.quad_rel_tol, noise_floor)) {
            converged = true;
            break;
        }
    }

    double log10_T = log10_abs_dd(integral);
    double log10_abs = log10_T - std::log10(kPi) - log_factorial(n) / kLn10;
    if (!converged)
        throw QuadratureError("integral_coefficient: no convergence after 12 halvings",
                              log10_abs, rel_change);

    int sign = parity_sign(n) * (integral.hi > 0.0 ? 1 : integral.hi < 0.0 ? -1 : 0);
    CoefficientEstimate est;
    est.n = n;
    est.method = Method::integral;
    est.value = sign == 0 ? ScaledReal{} : scaled_from_log10(sign, log10_abs);
    est.diagnostics.nodes = nodes;
    // the log10 round trip into ScaledReal costs a few ulps of log10|T|
    double representation_floor = 1e-15 + 2.3e-16 * std::fabs(log10_T);
    est.diagnostics.estimated_error =
        std::fmax(std::fmax(rel_change, noise_floor), representation_floor);
    return est;
}

// ---------------------------------------------------------------------
// Cauchy circle method

namespace {

struct CircleSum {
    double log_scale;   // the factored-out exponent X
    double scaled_sum;  // sum of Re e^{L_j - X} / m
};

CircleSum circle_sum(int n, double r, long m, double w_tol) {
    std::vector<Complex> logs;
    logs.reserve(static_cast<std::size_t>(m));
    double x_max = -std::numeric_limits<double>::infinity();
    for (long j = 0; j < m; ++j) {
        double th = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
        Complex z = std::polar(r, th);
        try {
            Complex L = -log_gamma(z) - Complex(0.0, th * n);
            logs.push_back(L);
            x_max = std::fmax(x_max, L.real());
        } catch (const PoleError&) {
            // 1/Gamma vanishes there; the sample contributes nothing
        }
    }
    (void)w_tol;
    double s = 0.0;
    for (const Complex& L : logs) s += std::exp(L - x_max).real();
    return {x_max, s / static_cast<double>(m)};
}

}  // namespace

CoefficientEstimate cauchy_coefficient(int n, const MethodConfig& cfg) {
    validate_config(cfg);
    if (n < 1) throw DomainError("cauchy_coefficient: n must be >= 1");

    double r;
    if (cfg.contour_radius) {
        r = *cfg.contour_radius;
    } else {
        Complex w = lambert_w(0, Complex(0.5 - n, 0.0), cfg.w_tol);
        r = std::exp(w.real());
    }
    double log10_r = std::log10(r);

    CoefficientEstimate est;
    est.n = n;
    est.method = Method::cauchy;

    CircleSum cur{};
    double rel_change = std::numeric_limits<double>::quiet_NaN();
    long m;
    if (cfg.contour_nodes) {
        m = *cfg.contour_nodes;
        cur = circle_sum(n, r, m, cfg.w_tol);
    } else {
        m = std::max<long>(64, 4L * n);
        cur = circle_sum(n, r, m, cfg.w_tol);
        bool converged = false;
        for (int dbl = 0; dbl < 8; ++dbl) {
            CircleSum next = circle_sum(n, r, 2 * m, cfg.w_tol);
            m *= 2;
            double ratio = std::exp(cur.log_scale - next.log_scale) * cur.scaled_sum /
                           next.scaled_sum;
            rel_change = std::fabs(1.0 - ratio);
            cur = next;
            if (rel_change <= cfg.quad_rel_tol) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            double l10 = (cur.log_scale + std::log(std::fabs(cur.scaled_sum))) / kLn10 -
                         n * log10_r;
            throw QuadratureError("cauchy_coefficient: no convergence after 8 doublings",
                                  l10, rel_change);
        }
    }

    int sign = cur.scaled_sum > 0.0 ? 1 : cur.scaled_sum < 0.0 ? -1 : 0;
    double log10_abs =
        (cur.log_scale + std::log(std::fabs(cur.scaled_sum))) / kLn10 - n * log10_r;
    est.value = sign == 0 ? ScaledReal{} : scaled_from_log10(sign, log10_abs);
    est.diagnostics.nodes = m;
    est.diagnostics.estimated_error = std::isnan(rel_change) ? 0.0 : rel_change;
    return est;
}

// ---------------------------------------------------------------------
// Saddle point

SaddlePoint solve_saddle(int n, double w_tol) {
    if (n < 2) throw DomainError("solve_saddle: n must be >= 2");
    Complex w = lambert_w_lower_cut(-1, -static_cast<double>(n), w_tol);
    Complex z0 = std::exp(Complex(w.real(), w.imag() - kPi)) / static_cast<double>(n);
    // defining equation, recomputed with the principal logarithm
    Complex t = std::log(static_cast<double>(n) * z0);
    double residual = std::abs(z0 * (t - Complex(0.0, kPi)) - 1.0);
    if (residual > 1e-10)
        throw SaddleRejectedError(
            "solve_saddle: saddle residual above bound at n = " + std::to_string(n),
            residual);
    // log z0 on the branch continuous with arg z0 in (0, pi)
    Complex log_z0(w.real() - std::log(static_cast<double>(n)), w.imag() + kPi);
    Complex f = -z0 - log_z0;
    return {z0, f, residual};
}

CoefficientEstimate saddle_coefficient(int n, const MethodConfig& cfg) {
    validate_config(cfg);
    SaddlePoint sp = solve_saddle(n, cfg.w_tol);
    Complex log_z0 = -sp.f_at_z0 - sp.z0;
    Complex L = static_cast<double>(n) * sp.f_at_z0 +
                0.5 * (std::log(kTwoPi * n) + log_z0 - std::log(1.0 + sp.z0));
    double s = std::sin(L.imag());
    if (std::fabs(s) < kDegeneratePhase)
        throw DegeneratePhaseError(
            "saddle_coefficient: sin of the phase vanishes at n = " + std::to_string(n) +
            "; the magnitude estimate is unreliable near a sign change");
    double log10_abs = (L.real() + std::log(std::fabs(s))) / kLn10 - std::log10(kPi) -
                       log_factorial(n) / kLn10;
    int sign = parity_sign(n) * (s > 0.0 ? 1 : -1);

    CoefficientEstimate est;
    est.n = n;
    est.method = Method::saddle;
    est.value = scaled_from_log10(sign, log10_abs);
    est.diagnostics.residual = sp.residual;
    return est;
}

// ---------------------------------------------------------------------
// Hayman-style circle asymptotic

CoefficientEstimate hayman_coefficient(int n, const MethodConfig& cfg) {
    validate_config(cfg);
    if (n < 2) throw DomainError("hayman_coefficient: n must be >= 2");
    Complex w = lambert_w(0, Complex(0.5 - n, 0.0), cfg.w_tol);
    double ln_r = w.real();
    double r = std::exp(ln_r);
    double theta = w.imag();  // in (0, pi)
    Complex zn = std::exp(w);

    double st = std::sin(theta);
    double phi = (n - 0.5) * (st * st / theta - theta);
    if (cfg.phase_variant == PhaseVariant::bornemann) phi += st / (12.0 * r);
    double c = std::cos(phi);
    if (std::fabs(c) < kDegeneratePhase)
        throw DegeneratePhaseError(
            "hayman_coefficient: cos of the phase vanishes at n = " + std::to_string(n));

    double ln_gamma_mod = log_gamma(zn).real();  // ln |Gamma(z_n)|
    double ln_abs = 0.5 * (std::log(2.0) - std::log(kPi) - std::log(n)) - ln_gamma_mod -
                    n * ln_r + std::log(std::fabs(c));

    CoefficientEstimate est;
    est.n = n;
    est.method = Method::hayman;
    est.value = scaled_from_log10(c > 0.0 ? 1 : -1, ln_abs / kLn10);
    est.diagnostics.phase_variant = cfg.phase_variant;
    est.diagnostics.phase_cos = c;
    return est;
}

// ---------------------------------------------------------------------
// Rough growth law

CoefficientEstimate rough_coefficient(int n) {
    if (n < 3) throw DomainError("rough_coefficient: n must be >= 3");
    double ln_n = std::log(static_cast<double>(n));
    double lln = std::log(ln_n);
    double e_corrected = n * (-ln_n + lln + 1.0 - 1.0 / ln_n);
    double e_literal = e_corrected - 2.0 * n * lln;
    double phase = std::sin(n * kPi / ln_n);
    int sign = parity_sign(n) * (phase > 0.0 ? 1 : phase < 0.0 ? -1 : 0);
    double log10_abs = (e_corrected + std::log(std::fabs(phase)) - std::log(kPi)) / kLn10;

    CoefficientEstimate est;
    est.n = n;
    est.method = Method::rough;
    est.value = sign == 0 ? ScaledReal{} : scaled_from_log10(sign, log10_abs);
    est.diagnostics.exponent_corrected = e_corrected;
    est.diagnostics.exponent_literal = e_literal;
    return est;
}

// ---------------------------------------------------------------------
// Companion sequence

std::vector<double> b_sequence(std::span<const double> a, int n_max) {
    if (n_max < 0) throw DomainError("b_sequence: n_max must be >= 0");
    if (a.size() < static_cast<std::size_t>(n_max) + 1)
        throw InconsistentInputError("b_sequence: need a_1 .. a_{n_max+1}");
    if (std::fabs(a[0] - 1.0) > 1e-12)
        throw InconsistentInputError("b_sequence: a_1 must equal 1");
    std::vector<double> b(static_cast<std::size_t>(n_max) + 1);
    b[0] = 1.0;
    for (int i = 1; i <= n_max; ++i) {
        double prev = b[static_cast<std::size_t>(i - 1)];
        double target = a[static_cast<std::size_t>(i)];
        double x = target - prev;
        if (x + prev != target) {
            // b_i is defined implicitly by b_i + b_{i-1} = a_{i+1}; when the
            // nearest difference does not satisfy that in floating point, a
            // neighbouring representable value usually does
            for (int step = 1; step <= 4 && x + prev != target; ++step) {
                double up = x, down = x;
                for (int s = 0; s < step; ++s) {
                    up = std::nextafter(up, std::numeric_limits<double>::infinity());
                    down = std::nextafter(down, -std::numeric_limits<double>::infinity());
                }
                if (up + prev == target)
                    x = up;
                else if (down + prev == target)
                    x = down;
            }
        }
        b[static_cast<std::size_t>(i)] = x;
    }
    return b;
}

}  // namespace rgc
