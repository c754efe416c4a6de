#include "xmscarf/susy.hpp"

#include <cmath>

#include "xmscarf/eop.hpp"
#include "xmscarf/errors.hpp"

namespace xmscarf {

namespace {

void require_trig(const PotentialSpec& spec) {
    if (spec.family != Family::TrigScarf) {
        throw InvalidArgument("SUSY partners are built for the real trigonometric family only");
    }
}

/// p(s)/q(s) and its s-derivative.
struct Ratio {
    double value;
    double ds;
};

Ratio ratio_with_derivative(const JacobiParam& num, const JacobiParam& den, double s, double x) {
    const double q = jacobi_eval(den, s);
    if (std::abs(q) < kSingularTolerance) {
        throw SingularPoint("superpotential denominator vanishes", x);
    }
    const double p = jacobi_eval(num, s);
    const double dp = num.n >= 1 ? jacobi_deriv(num, s, 1) : 0.0;
    const double dq = den.n >= 1 ? jacobi_deriv(den, s, 1) : 0.0;
    return {p / q, (dp * q - p * dq) / (q * q)};
}

struct Pieces {
    double s, c;
    Ratio first, second;
};

Pieces pieces(const PotentialSpec& spec, double x) {
    require_trig(spec);
    const double a = spec.a;
    const double b = spec.b;
    const int m = spec.m;
    const double kx = spec.k * x;
    Pieces p{};
    p.s = std::sin(kx);
    p.c = std::cos(kx);
    p.first = ratio_with_derivative({-a, b, m - 1}, {-a - 1.0, b - 1.0, m}, p.s, x);
    p.second = ratio_with_derivative({-a - 1.0, b + 1.0, m - 1}, {-a - 2.0, b, m}, p.s, x);
    return p;
}

} // namespace

SusyPair make_susy_pair(const PotentialSpec& spec) {
    require_trig(spec);
    validate(spec);
    const double q = spec.a + spec.b + 1.0;
    return {spec, spec.k * spec.k * q * q / 4.0};
}

double superpotential(const PotentialSpec& spec, double x) {
    const Pieces p = pieces(spec, x);
    const double k = spec.k;
    const double t = spec.a - spec.b - spec.m + 1.0;
    return k * (spec.a - spec.b) / 2.0 / p.c + k * (spec.a + spec.b + 1.0) / 2.0 * p.s / p.c -
           k * t * p.c / 2.0 * (p.first.value - p.second.value);
}

double superpotential_derivative(const PotentialSpec& spec, double x) {
    const Pieces p = pieces(spec, x);
    const double k = spec.k;
    const double t = spec.a - spec.b - spec.m + 1.0;
    const double sec = 1.0 / p.c;
    const double diff = p.first.value - p.second.value;
    const double ddiff_dx = (p.first.ds - p.second.ds) * k * p.c;
    return k * k * (spec.a - spec.b) / 2.0 * sec * sec * p.s +
           k * k * (spec.a + spec.b + 1.0) / 2.0 * sec * sec -
           k * t / 2.0 * (-k * p.s * diff + p.c * ddiff_dx);
}

double partner_potential(const PotentialSpec& spec, PartnerSign sign, double x) {
    const double w = superpotential(spec, x);
    const double dw = superpotential_derivative(spec, x);
    return sign == PartnerSign::Minus ? w * w - dw : w * w + dw;
}

double partner_potential_closed_form(const PotentialSpec& spec, PartnerSign sign, double x) {
    require_trig(spec);
    const double a = spec.a;
    const double b = spec.b;
    const int m = spec.m;
    const double k2 = spec.k * spec.k;
    const double shift = k2 * (a + b + 1.0) * (a + b + 1.0) / 4.0;
    if (sign == PartnerSign::Minus) return potential_value(spec, x).real() - shift;

    const double kx = spec.k * x;
    const double s = std::sin(kx);
    const double c2 = std::cos(kx) * std::cos(kx);
    const double t = a - b - m + 1.0;
    const double a1 = a + 1.0;
    const double b1 = b + 1.0;
    double v = k2 * (2.0 * a1 * a1 + 2.0 * b1 * b1 - 1.0) / 4.0 / c2 - k2 * (b1 * b1 - a1 * a1) / 2.0 * s / c2;
    if (m > 0) {
        const double q = jacobi_eval(JacobiParam{-a - 2.0, b, m}, s);
        if (std::abs(q) < kSingularTolerance) throw SingularPoint("V+ denominator vanishes", x);
        const double r = jacobi_eval(JacobiParam{-a - 1.0, b + 1.0, m - 1}, s) / q;
        v += -k2 * t * (a + b + 2.0 + (a - b + 1.0) * s) * r + k2 * t * t * c2 / 2.0 * r * r -
             2.0 * k2 * m * t;
    }
    return v - shift;
}

double shape_invariance_remainder(const PotentialSpec& spec) {
    return spec.k * spec.k * (spec.a + spec.b + 2.0);
}

double shape_invariance_defect(const PotentialSpec& spec, double x) {
    PotentialSpec shifted = spec;
    shifted.a += 1.0;
    shifted.b += 1.0;
    const double plus = partner_potential(spec, PartnerSign::Plus, x);
    const double minus_shifted = partner_potential(shifted, PartnerSign::Minus, x);
    return std::abs(plus - minus_shifted - shape_invariance_remainder(spec));
}

} // namespace xmscarf
