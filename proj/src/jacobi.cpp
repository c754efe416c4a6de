#include "xmscarf/jacobi.hpp"

#include <cmath>

#include "xmscarf/errors.hpp"

namespace xmscarf {

namespace {

template <class T>
T ipow(T base, int e) {
    T r(1.0);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

double falling_factorial(int s, int i) {
    double r = 1.0;
    for (int q = 0; q < i; ++q) r *= static_cast<double>(s - q);
    return r;
}

bool is_nonpositive_integer(double c) {
    const double nearest = std::round(c);
    return nearest <= 0.0 && std::abs(c - nearest) < 1e-12;
}

} // namespace

double generalized_binomial(double alpha, int j) {
    if (j < 0) return 0.0;
    double r = 1.0;
    for (int i = 0; i < j; ++i) r *= (alpha - i) / (i + 1);
    return r;
}

double rising_factorial(double x, int r) {
    double p = 1.0;
    for (int i = 0; i < r; ++i) p *= x + i;
    return p;
}

JacobiPolynomial::JacobiPolynomial(const JacobiParam& p) : param_(p) {
    if (!std::isfinite(p.a) || !std::isfinite(p.b)) {
        throw InvalidArgument("Jacobi parameters must be finite");
    }
    if (p.n < -1) throw InvalidArgument("Jacobi degree must be >= -1");
    if (p.n < 0) return;
    const int n = p.n;
    coeff_.resize(n + 1);
    for (int s = 0; s <= n; ++s) {
        coeff_[s] = generalized_binomial(n + p.a, n - s) * generalized_binomial(n + p.b, s);
    }
    far_.resize(n + 1);
    double ratio = 1.0;
    for (int q = 0; q <= n; ++q) {
        far_[q] = generalized_binomial(n + p.a, n - q) * ratio;
        ratio *= (n + p.a + p.b + 1.0 + q) / (q + 1.0);
    }
}

template <class T>
T JacobiPolynomial::value(T x) const {
    const int n = param_.n;
    if (n < 0) return T(0.0);
    if (n == 0) return T(1.0);
    const T u = (x - 1.0) * 0.5;
    if (std::abs(x) > kFarField) {
        T r(far_[n]);
        for (int q = n - 1; q >= 0; --q) r = r * u + far_[q];
        return r;
    }
    const T v = (x + 1.0) * 0.5;
    // homogeneous Horner in (u, v)
    T r(coeff_[n]);
    T vp(1.0);
    for (int s = n - 1; s >= 0; --s) {
        vp *= v;
        r = r * u + coeff_[s] * vp;
    }
    return r;
}

template <class T>
T JacobiPolynomial::derivative_termwise(T x, int r) const {
    const int n = param_.n;
    if (r < 0) throw InvalidArgument("derivative order must be >= 0");
    if (r == 0) return value(x);
    if (n < r) return T(0.0);
    const T u = (x - 1.0) * 0.5;
    const T v = (x + 1.0) * 0.5;
    T total(0.0);
    for (int s = 0; s <= n; ++s) {
        const int t = n - s;
        T term(0.0);
        for (int i = 0; i <= r; ++i) {
            if (i > s || r - i > t) continue;
            const double c = generalized_binomial(r, i) * falling_factorial(s, i) *
                             falling_factorial(t, r - i);
            term += c * ipow(u, s - i) * ipow(v, t - r + i);
        }
        total += coeff_[s] * term;
    }
    return total * std::ldexp(1.0, -r);
}

template <class T>
Jet<T> JacobiPolynomial::jet(T x) const {
    return {value(x), jacobi_deriv(param_, x, 1), jacobi_deriv(param_, x, 2)};
}

template <class T>
T jacobi_eval(const JacobiParam& p, T x) {
    return JacobiPolynomial(p).value(x);
}

template <class T>
T jacobi_deriv(const JacobiParam& p, T x, int r) {
    if (r < 1) throw InvalidArgument("derivative order must be >= 1");
    if (p.n < r) return T(0.0);
    const double c = p.a + p.b + p.n + 1.0;
    if (is_nonpositive_integer(c)) return JacobiPolynomial(p).derivative_termwise(x, r);
    const double scale = rising_factorial(c, r) * std::ldexp(1.0, -r);
    return scale * jacobi_eval(JacobiParam{p.a + r, p.b + r, p.n - r}, x);
}

template <class T>
Jet<T> jacobi_jet(const JacobiParam& p, T x) {
    return JacobiPolynomial(p).jet(x);
}

template double JacobiPolynomial::value(double) const;
template Complex JacobiPolynomial::value(Complex) const;
template double JacobiPolynomial::derivative_termwise(double, int) const;
template Complex JacobiPolynomial::derivative_termwise(Complex, int) const;
template Jet<double> JacobiPolynomial::jet(double) const;
template Jet<Complex> JacobiPolynomial::jet(Complex) const;
template double jacobi_eval(const JacobiParam&, double);
template Complex jacobi_eval(const JacobiParam&, Complex);
template double jacobi_deriv(const JacobiParam&, double, int);
template Complex jacobi_deriv(const JacobiParam&, Complex, int);
template Jet<double> jacobi_jet(const JacobiParam&, double);
template Jet<Complex> jacobi_jet(const JacobiParam&, Complex);

} // namespace xmscarf
