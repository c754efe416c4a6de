#include "xmscarf/closed_forms.hpp"

#include <cmath>

namespace xmscarf::closed_forms {

ScarfParams from_alpha_beta(double alpha, double beta) {
    return {alpha - beta - 0.5, alpha + beta - 0.5};
}

double scarf_m0(double alpha, double beta, double k, double x) {
    const double s = std::sin(k * x);
    const double c = std::cos(k * x);
    const double k2 = k * k;
    return k2 * (alpha * (alpha - 1.0) + beta * beta) / (c * c) - k2 * beta * (2.0 * alpha - 1.0) * s / (c * c);
}

double scarf_m1(double alpha, double beta, double k, double x) {
    const double s = std::sin(k * x);
    const double k2 = k * k;
    const double d = 2.0 * alpha - 1.0 - 2.0 * beta * s;
    const double u = 2.0 * alpha - 1.0;
    return scarf_m0(alpha, beta, k, x) + 2.0 * k2 * u / d - 2.0 * k2 * (u * u - 4.0 * beta * beta) / (d * d);
}

double scarf_m2(double alpha, double beta, double k, double x) {
    const double s = std::sin(k * x);
    const double c = std::cos(k * x);
    const double k2 = k * k;
    const double d = 2.0 * (beta + 1.0) * (2.0 * beta + 1.0) * s * s +
                     2.0 * (2.0 * beta + 1.0) * (2.0 * alpha - 1.0) * s + 4.0 * alpha * (alpha - 1.0) -
                     2.0 * beta - 1.0;
    const double first = 4.0 * k2 *
                         (3.0 * (2.0 * alpha - 1.0) * (2.0 * beta + 1.0) * s - 2.0 * beta * (2.0 * beta + 1.0) -
                          8.0 * alpha * (alpha - 1.0)) /
                         d;
    const double q = 2.0 * (1.0 + beta) * s - 2.0 * alpha + 1.0;
    const double second = 8.0 * (2.0 * beta + 1.0) * (2.0 * beta + 1.0) * k2 * c * c * q * q / (d * d);
    return scarf_m0(alpha, beta, k, x) + first + second - 8.0 * k2;
}

double energy_m0(double alpha, double k, int n) {
    return k * k * (n + alpha) * (n + alpha);
}

double energy_m1(double alpha, double k, int n) {
    return k * k * (n + alpha - 1.0) * (n + alpha - 1.0);
}

double energy_m2_published(double alpha, double k, int n) {
    return k * k / 4.0 * (n + alpha - 2.0) * (n + alpha - 2.0);
}

} // namespace xmscarf::closed_forms
