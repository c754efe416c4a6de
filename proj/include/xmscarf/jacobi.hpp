#pragma once

#include <complex>
#include <vector>

#include "xmscarf/jet.hpp"

namespace xmscarf {

using Complex = std::complex<double>;

/// Classical Jacobi polynomial P_n^(a,b). Parameters are unrestricted reals;
/// negative and integer-valued a, b (where the three-term recurrence breaks
/// down) are supported. Degree -1 is the zero polynomial.
struct JacobiParam {
    double a = 0.0;
    double b = 0.0;
    int n = 0;
};

/// C(alpha, j) as a j-term product; finite for every real alpha.
double generalized_binomial(double alpha, int j);

/// (x)_r = x (x+1) ... (x+r-1).
double rising_factorial(double x, int r);

/// Coefficients of P_n^(a,b) in the basis u^s v^(n-s), u = (x-1)/2, v = (x+1)/2,
/// built once and reused for repeated evaluation at many points. For |x| above
/// kFarField the expansion in powers of u alone is used instead: its
/// coefficients C(n+a, n-q) (n+a+b+1)_q / q! vanish exactly when the degree
/// drops, so large arguments do not pay for cancelling O(|x|^n) terms.
class JacobiPolynomial {
public:
    explicit JacobiPolynomial(const JacobiParam& p);

    const JacobiParam& param() const noexcept { return param_; }
    int degree() const noexcept { return param_.n; }

    template <class T>
    T value(T x) const;

    /// r-th derivative by differentiating each u^s v^(n-s) term.
    template <class T>
    T derivative_termwise(T x, int r) const;

    template <class T>
    Jet<T> jet(T x) const;

    static constexpr double kFarField = 3.0;

private:
    JacobiParam param_;
    std::vector<double> coeff_;
    std::vector<double> far_;
};

template <class T>
T jacobi_eval(const JacobiParam& p, T x);

/// r-th derivative, r >= 1. Uses d^r P_n^(a,b) = (a+b+n+1)_r / 2^r P_{n-r}^(a+r,b+r),
/// switching to term-by-term differentiation when a+b+n+1 is a nonpositive integer.
template <class T>
T jacobi_deriv(const JacobiParam& p, T x, int r);

template <class T>
Jet<T> jacobi_jet(const JacobiParam& p, T x);

} // namespace xmscarf
