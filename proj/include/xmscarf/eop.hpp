#pragma once

#include "xmscarf/jacobi.hpp"

namespace xmscarf {

/// Exceptional X_m Jacobi polynomial \hat P_n^(a,b,m), n >= m.
struct EopIndex {
    double a = 0.0;
    double b = 0.0;
    int m = 0;
    int n = 0;
};

/// Tolerance for "equals an integer" and "denominator vanishes".
inline constexpr double kIntegerTolerance = 1e-12;
inline constexpr double kSingularTolerance = 1e-12;

/// Parameter conditions under which P_m^(-a-1,b-1) has no zeros on [-1, 1]:
/// b != 0; a and a-b-m+1 not in {0, ..., m-1}; a > m-2; sgn(a-m+1) = sgn(b).
/// Always true for m = 0.
bool admissible(double a, double b, int m);

/// The denominator polynomial P_m^(-a-1,b-1).
JacobiParam denominator_param(double a, double b, int m);

/// True when P_m^(-a-1,b-1) changes sign between consecutive points of a
/// uniform `samples`-point grid on [-1, 1].
bool denominator_changes_sign(double a, double b, int m, int samples);

/// m = 0 gives P_n^(a,b); for m >= 1 the bilinear form in classical Jacobi
/// polynomials with j = n - m. Throws DegenerateParameter if a + j + 1 = 0.
template <class T>
T eop_eval(const EopIndex& idx, T x);

/// Value and first two derivatives, differentiated exactly through the
/// bilinear representation.
template <class T>
Jet<T> eop_jet(const EopIndex& idx, T x);

/// Q1(x), R1(x) of (1-x^2) y'' + Q1 y' + R1 y = 0.
struct OdeCoefficients {
    double q1 = 0.0;
    double r1 = 0.0;
};

OdeCoefficients ode_coefficients(const EopIndex& idx, double x);

/// (1-x^2) y'' + Q1 y' + R1 y for an arbitrary y (signed).
double ode_operator(const EopIndex& idx, double x, const Jet<double>& y);

/// |ode_operator| with y = \hat P_n^(a,b,m). Throws SingularPoint where the
/// denominator P_m^(-a-1,b-1) vanishes.
double eop_ode_residual(const EopIndex& idx, double x);

/// (1-x)^a (1+x)^b / P_m^(-a-1,b-1)(x)^2, the orthogonality weight.
double eop_weight(double a, double b, int m, double x);

/// Same weight given the endpoint distances 1-x and 1+x directly.
double eop_weight(double a, double b, int m, double x, double one_minus_x, double one_plus_x);

/// Closed-form squared L2 norm:
///   2^(a+b+1) (n+b)(n-2m+a+1) G(j+a+2) G(j+b)
///   / [(2j+a+b+1)(j+a+1)^2 j! G(j+a+b+1)],  j = n - m.
/// Throws DegenerateParameter at Gamma poles or zero denominators.
double eop_norm_sq(const EopIndex& idx);

/// Quadrature value of the weighted inner product of two members of one
/// (a, b, m) family. Requires a, b > -1.
double eop_inner_product(const EopIndex& first, const EopIndex& second, int quad_order);

/// 200, or XMSCARF_QUAD_ORDER when set to an integer >= 10.
int default_quad_order();

} // namespace xmscarf
