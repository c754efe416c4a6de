#include "xmscarf/potentials.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "xmscarf/eop.hpp"
#include "xmscarf/errors.hpp"

namespace xmscarf {

namespace {

constexpr Complex kI{0.0, 1.0};

struct ShiftedTrig {
    Complex sin;
    Complex cos;
};

// sin and cos of kx + i eps through e^{i(kx + i eps)}
ShiftedTrig shifted_trig(double kx, double eps) {
    const Complex e = std::exp(Complex(-eps, kx));
    const Complex inv = 1.0 / e;
    return {(e - inv) / (2.0 * kI), 0.5 * (e + inv)};
}

/// P_{m-1}^(-a,b)(s) / P_m^(-a-1,b-1)(s)
template <class S>
S extension_ratio(int m, double a, double b, S s, double x) {
    const S den = jacobi_eval(JacobiParam{-a - 1.0, b - 1.0, m}, s);
    if (std::abs(den) < kSingularTolerance) {
        throw SingularPoint("potential denominator P_m^(-a-1,b-1) vanishes", x);
    }
    return jacobi_eval(JacobiParam{-a, b, m - 1}, s) / den;
}

template <class S>
S trig_form(int m, double a, double b, double k, S s, S c, double x) {
    const double k2 = k * k;
    const double t = a - b - m + 1.0;
    const S c2 = c * c;
    S v = k2 * (2.0 * a * a + 2.0 * b * b - 1.0) / 4.0 / c2 - k2 * (b * b - a * a) / 2.0 * s / c2;
    if (m == 0) return v;
    const S r = extension_ratio(m, a, b, s, x);
    v += -2.0 * k2 * m * t - k2 * t * (a + b + (a - b + 1.0) * s) * r + k2 * t * t * c2 / 2.0 * r * r;
    return v;
}

void require_in_domain(const PotentialSpec& spec, double x) {
    if (!std::isfinite(x)) throw InvalidArgument("coordinate must be finite");
    if (spec.family == Family::TrigScarf) {
        const double edge = std::numbers::pi / (2.0 * spec.k);
        if (!(std::abs(x) < edge - kEndpointGuard)) {
            throw InvalidArgument("x = " + std::to_string(x) + " outside (-pi/2k, pi/2k) less the endpoint guard");
        }
    }
}

template <class S>
S eop_factor(const PotentialSpec& spec, int n, S s, double x) {
    const EopIndex idx{spec.a, spec.b, spec.m, n};
    const S den = jacobi_eval(JacobiParam{-spec.a - 1.0, spec.b - 1.0, spec.m}, s);
    if (std::abs(den) < kSingularTolerance) {
        throw SingularPoint("wavefunction denominator P_m^(-a-1,b-1) vanishes", x);
    }
    return eop_eval(idx, s) / den;
}

} // namespace

const char* family_name(Family f) {
    switch (f) {
    case Family::TrigScarf: return "trig";
    case Family::ShiftedTrigScarf: return "shifted";
    case Family::HyperbolicScarf: return "hyper";
    }
    return "unknown";
}

PotentialSpec PotentialSpec::trig(int m, double a, double b, double k) {
    return {Family::TrigScarf, m, a, b, k, 0.0};
}

PotentialSpec PotentialSpec::shifted(int m, double a, double b, double k, double eps) {
    return {Family::ShiftedTrigScarf, m, a, b, k, eps};
}

PotentialSpec PotentialSpec::hyperbolic(int m, double a, double b, double k) {
    return {Family::HyperbolicScarf, m, a, b, k, 0.0};
}

void validate(const PotentialSpec& spec) {
    if (spec.m < 0) throw InvalidArgument("m must be >= 0");
    if (!std::isfinite(spec.a) || !std::isfinite(spec.b) || !std::isfinite(spec.eps)) {
        throw InvalidArgument("a, b and eps must be finite");
    }
    if (!(spec.k > 0.0) || !std::isfinite(spec.k)) throw InvalidArgument("k must be a positive finite number");
    if (spec.family == Family::TrigScarf && !admissible(spec.a, spec.b, spec.m)) {
        throw InvalidArgument("inadmissible parameters (a, b, m) for the trigonometric family");
    }
}

Domain domain(const PotentialSpec& spec) {
    if (spec.family == Family::TrigScarf) {
        const double edge = std::numbers::pi / (2.0 * spec.k);
        return {-edge, edge, true};
    }
    return {-INFINITY, INFINITY, false};
}

Complex potential_value(const PotentialSpec& spec, double x) {
    require_in_domain(spec, x);
    const int m = spec.m;
    const double a = spec.a;
    const double b = spec.b;
    const double k = spec.k;
    switch (spec.family) {
    case Family::TrigScarf: {
        const double kx = k * x;
        return {trig_form(m, a, b, k, std::sin(kx), std::cos(kx), x), 0.0};
    }
    case Family::ShiftedTrigScarf: {
        const ShiftedTrig st = shifted_trig(k * x, spec.eps);
        return trig_form(m, a, b, k, st.sin, st.cos, x);
    }
    case Family::HyperbolicScarf: {
        const double k2 = k * k;
        const double t = a - b - m + 1.0;
        const double kx = k * x;
        const double ch = std::cosh(kx);
        const double sech = 1.0 / ch;
        const double th = std::tanh(kx);
        Complex v = -k2 * (2.0 * a * a + 2.0 * b * b - 1.0) / 4.0 * sech * sech +
                    kI * (k2 * (b * b - a * a) / 2.0 * sech * th);
        if (m == 0) return v;
        const Complex g = kI * std::sinh(kx);
        const Complex r = extension_ratio(m, a, b, g, x);
        v += 2.0 * k2 * m * t + k2 * t * (a + b + (a - b + 1.0) * g) * r - k2 * t * t * ch * ch / 2.0 * r * r;
        return v;
    }
    }
    throw InvalidArgument("unknown family");
}

Complex trig_scarf_continued(int m, double a, double b, double k, Complex x) {
    const Complex kx = k * x;
    return trig_form(m, a, b, k, std::sin(kx), std::cos(kx), x.real());
}

int hyperbolic_bound_count(const PotentialSpec& spec) {
    if (spec.family != Family::HyperbolicScarf) {
        throw InvalidArgument("bound-state count applies to the hyperbolic family only");
    }
    const double limit = -(spec.a + spec.b + 1.0) / 2.0;
    if (limit <= kIntegerTolerance) return 0;
    return static_cast<int>(std::ceil(limit - kIntegerTolerance));
}

double energy(const PotentialSpec& spec, int n) {
    if (n < spec.m) {
        throw NoSuchBoundState("quantum number n = " + std::to_string(n) + " below m = " + std::to_string(spec.m));
    }
    const double q = 2.0 * (n - spec.m) + spec.a + spec.b + 1.0;
    const double e = spec.k * spec.k / 4.0 * q * q;
    if (spec.family != Family::HyperbolicScarf) return e;
    if (n - spec.m >= hyperbolic_bound_count(spec)) {
        throw NoSuchBoundState("n = " + std::to_string(n) + " violates n < m - (a+b+1)/2");
    }
    return -e;
}

double normalization_constant(const PotentialSpec& spec, int n) {
    if (spec.family == Family::HyperbolicScarf) return 1.0;
    const double norm = eop_norm_sq(EopIndex{spec.a, spec.b, spec.m, n});
    if (!(norm > 0.0)) throw DegenerateParameter("nonpositive norm; parameters outside the normalizable range");
    return std::sqrt(spec.k / norm);
}

BoundState bound_state(const PotentialSpec& spec, int n) {
    const double e = energy(spec, n);
    return {n, e, normalization_constant(spec, n)};
}

Complex wavefunction(const PotentialSpec& spec, int n, double x) {
    require_in_domain(spec, x);
    energy(spec, n);  // bound-state range check
    const double pa = spec.a / 2.0 + 0.25;
    const double pb = spec.b / 2.0 + 0.25;
    const double kx = spec.k * x;
    switch (spec.family) {
    case Family::TrigScarf: {
        // 1 -+ sin(kx) = 2 sin^2(pi/4 -+ kx/2), accurate near the walls
        const double sm = std::sin(std::numbers::pi / 4.0 - kx / 2.0);
        const double sp = std::sin(std::numbers::pi / 4.0 + kx / 2.0);
        const double envelope = std::pow(2.0 * sm * sm, pa) * std::pow(2.0 * sp * sp, pb);
        const double s = std::sin(kx);
        return {normalization_constant(spec, n) * envelope * eop_factor(spec, n, s, x), 0.0};
    }
    case Family::ShiftedTrigScarf: {
        const Complex s = shifted_trig(kx, spec.eps).sin;
        const Complex envelope = std::pow(1.0 - s, pa) * std::pow(1.0 + s, pb);
        return normalization_constant(spec, n) * envelope * eop_factor(spec, n, s, x);
    }
    case Family::HyperbolicScarf: {
        const Complex g = kI * std::sinh(kx);
        const Complex envelope = std::pow(1.0 - g, pa) * std::pow(1.0 + g, pb);
        return envelope * eop_factor(spec, n, g, x);
    }
    }
    throw InvalidArgument("unknown family");
}

double pt_defect(const PotentialSpec& spec, double x) {
    return std::abs(std::conj(potential_value(spec, -x)) - potential_value(spec, x));
}

} // namespace xmscarf
