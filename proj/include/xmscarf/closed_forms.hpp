#pragma once

// Hand-simplified special cases of the trigonometric family written in the
// classical Scarf couplings (alpha, beta), with a = alpha - beta - 1/2 and
// b = alpha + beta - 1/2. They are kept verbatim as independent references
// for the general m-dependent evaluator.

namespace xmscarf::closed_forms {

struct ScarfParams {
    double a;
    double b;
};

ScarfParams from_alpha_beta(double alpha, double beta);

/// k^2 [alpha(alpha-1) + beta^2] sec^2 kx - k^2 beta (2 alpha - 1) sec kx tan kx
double scarf_m0(double alpha, double beta, double k, double x);

/// m = 1 extension with denominator 2 alpha - 1 - 2 beta sin kx.
double scarf_m1(double alpha, double beta, double k, double x);

/// m = 2 extension as published, quadratic denominator in sin kx.
double scarf_m2(double alpha, double beta, double k, double x);

/// k^2 (n + alpha)^2
double energy_m0(double alpha, double k, int n);

/// k^2 (n + alpha - 1)^2, n >= 1
double energy_m1(double alpha, double k, int n);

/// (k^2 / 4)(n + alpha - 2)^2, n >= 2. Differs from energy() for the same level.
double energy_m2_published(double alpha, double k, int n);

} // namespace xmscarf::closed_forms
