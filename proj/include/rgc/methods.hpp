#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rgc/scaled_real.hpp"
#include "rgc/special.hpp"

namespace rgc {

enum class Method { bourguet, cauchy, integral, saddle, hayman, rough };
enum class PhaseVariant { bornemann, hayman };

const char* method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);
const char* phase_variant_name(PhaseVariant v);
std::optional<PhaseVariant> phase_variant_from_name(std::string_view name);

/// Per-method tunables.  Empty optionals mean AUTO.
struct MethodConfig {
    double quad_step = 0.05;        // coarsest trapezoid step for the integral method
    double quad_rel_tol = 1e-10;    // relative-change convergence target
    std::optional<double> contour_radius;  // Cauchy circle radius; AUTO = saddle circle
    std::optional<int> contour_nodes;      // fixed node count; AUTO = doubled until tol
    double w_tol = 1e-13;           // Lambert W residual tolerance
    PhaseVariant phase_variant = PhaseVariant::bornemann;
};

struct Diagnostics {
    double residual = 0.0;         // saddle / Lambert W defining-equation residual
    long nodes = 0;                // quadrature nodes used
    double estimated_error = 0.0;  // relative error estimate where available
    std::optional<PhaseVariant> phase_variant;
    std::optional<double> phase_cos;           // hayman method: cos(phi_n)
    std::optional<double> exponent_corrected;  // rough method, nats
    std::optional<double> exponent_literal;    // rough method, sign-uncorrected
};

struct CoefficientEstimate {
    int n = 0;
    ScaledReal value;
    Method method = Method::saddle;
    Diagnostics diagnostics;
};

struct SaddlePoint {
    Complex z0;
    Complex f_at_z0;   // f(z0) = -z0 - log z0
    double residual;   // |z0 (Log(n z0) - i pi) - 1|
};

/// First n_max coefficients by the zeta recursion, native doubles.
/// a[0] = a_1 = 1, a[1] = a_2 = Euler's gamma.  The recursion loses
/// roughly one digit per index; n_max > 60 is refused.
std::vector<double> bourguet_sequence(int n_max);

/// a_n from the real-line integral of e^{-t} Im{(log t - i pi)^n},
/// substituted t = e^u and integrated by the trapezoidal rule with step
/// halving.  Compensated (double-double) arithmetic inside: the
/// integrand cancels to roughly |a_n| out of unit scale, which exceeds
/// native precision past n ~ 16.  1 <= n <= 40.
CoefficientEstimate integral_coefficient(int n, const MethodConfig& cfg = {});

/// a_n by the trapezoidal rule on a circle, which for m nodes is the
/// discrete Fourier transform of 1/Gamma sampled on the contour.
/// AUTO radius is the saddle circle |e^{W0(1/2-n)}|.
CoefficientEstimate cauchy_coefficient(int n, const MethodConfig& cfg = {});

/// Saddle point z0 = e^{-i pi} e^{W_{-1}(-n)} / n of the coefficient
/// integral, with the defining-equation residual recomputed under the
/// principal logarithm rather than trusted from the W branch label.
SaddlePoint solve_saddle(int n, double w_tol = 1e-13);

/// Saddle-point asymptotic estimate, assembled in log scale so that
/// magnitudes like 1e-2792 are exact ScaledReal values.
CoefficientEstimate saddle_coefficient(int n, const MethodConfig& cfg = {});

/// Hayman-style circle asymptotic with either phase variant.
CoefficientEstimate hayman_coefficient(int n, const MethodConfig& cfg = {});

/// Leading-order growth law with sign oscillation sin(n pi / ln n).
/// Diagnostics carry both the corrected exponent (the default) and the
/// uncorrected one with the opposite n ln ln n sign.
CoefficientEstimate rough_coefficient(int n);

/// Companion sequence b with a_n = b_{n-1} + b_{n-2}: b_0 = 1 and
/// b_n = a_{n+1} - b_{n-1}.  `a[i]` holds a_{i+1}; requires a_1 = 1.
std::vector<double> b_sequence(std::span<const double> a, int n_max);

}  // namespace rgc
