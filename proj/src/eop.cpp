#include "xmscarf/eop.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "xmscarf/errors.hpp"
#include "xmscarf/kernels.hpp"
#include "xmscarf/numerics.hpp"

namespace xmscarf {

namespace {

bool is_integer_in_range(double v, int lo, int hi) {
    const double r = std::round(v);
    return std::abs(v - r) < kIntegerTolerance && r >= lo && r <= hi;
}

int signum(double v) {
    if (std::abs(v) < kIntegerTolerance) return 0;
    return v > 0.0 ? 1 : -1;
}

bool is_gamma_pole(double x) {
    return is_integer_in_range(x, -1000000, 0);
}

double gamma_checked(double x) {
    if (is_gamma_pole(x)) throw DegenerateParameter("Gamma pole in closed-form norm");
    return std::tgamma(x);
}

void require_nonzero(double v, const char* what) {
    if (std::abs(v) < kIntegerTolerance) throw DegenerateParameter(what);
}

const GradedRule& cached_rule(int order, int grading) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, GradedRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find({order, grading});
    if (it == cache.end()) {
        it = cache.emplace(std::pair{order, grading}, graded_gauss_legendre(order, grading)).first;
    }
    return it->second;
}

} // namespace

bool admissible(double a, double b, int m) {
    if (m < 0) throw InvalidArgument("codimension m must be >= 0");
    if (m == 0) return true;
    if (signum(b) == 0) return false;
    if (is_integer_in_range(a, 0, m - 1)) return false;
    if (is_integer_in_range(a - b - m + 1, 0, m - 1)) return false;
    if (!(a > m - 2)) return false;
    return signum(a - m + 1) == signum(b);
}

JacobiParam denominator_param(double a, double b, int m) {
    return {-a - 1.0, b - 1.0, m};
}

bool denominator_changes_sign(double a, double b, int m, int samples) {
    if (samples < 2) throw InvalidArgument("need at least two samples");
    const JacobiPolynomial den(denominator_param(a, b, m));
    double prev = den.value(-1.0);
    for (int i = 1; i < samples; ++i) {
        const double x = -1.0 + 2.0 * i / (samples - 1);
        const double cur = den.value(x);
        if ((prev < 0.0 && cur > 0.0) || (prev > 0.0 && cur < 0.0) || cur == 0.0) return true;
        prev = cur;
    }
    return false;
}

template <class T>
Jet<T> eop_jet(const EopIndex& idx, T x) {
    if (idx.m < 0) throw InvalidArgument("codimension m must be >= 0");
    if (idx.n < idx.m) throw InvalidArgument("exceptional degree n must satisfy n >= m");
    const double a = idx.a;
    const double b = idx.b;
    const int m = idx.m;
    if (m == 0) return jacobi_jet(JacobiParam{a, b, idx.n}, x);

    const int j = idx.n - m;
    const double denom = a + j + 1.0;
    if (std::abs(denom) < kIntegerTolerance) {
        throw DegenerateParameter("a + (n - m) + 1 = 0 in the exceptional Jacobi representation");
    }
    const double c1 = (a + b + j + 1.0) / (2.0 * denom);
    const double c2 = (a - m + 1.0) / denom;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;

    const Jet<T> lin{x - 1.0, T(1.0), T(0.0)};
    const Jet<T> pa = jacobi_jet(JacobiParam{-a - 1.0, b - 1.0, m}, x);
    const Jet<T> pb = jacobi_jet(JacobiParam{a + 2.0, b, j - 1}, x);
    const Jet<T> pc = jacobi_jet(JacobiParam{-a - 2.0, b, m}, x);
    const Jet<T> pd = jacobi_jet(JacobiParam{a + 1.0, b - 1.0, j}, x);
    return sign * (c1 * (lin * pa * pb) + c2 * (pc * pd));
}

template <class T>
T eop_eval(const EopIndex& idx, T x) {
    if (idx.m < 0) throw InvalidArgument("codimension m must be >= 0");
    if (idx.n < idx.m) throw InvalidArgument("exceptional degree n must satisfy n >= m");
    const double a = idx.a;
    const double b = idx.b;
    const int m = idx.m;
    if (m == 0) return jacobi_eval(JacobiParam{a, b, idx.n}, x);
    const int j = idx.n - m;
    const double denom = a + j + 1.0;
    if (std::abs(denom) < kIntegerTolerance) {
        throw DegenerateParameter("a + (n - m) + 1 = 0 in the exceptional Jacobi representation");
    }
    const double c1 = (a + b + j + 1.0) / (2.0 * denom);
    const double c2 = (a - m + 1.0) / denom;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const T first = c1 * (x - 1.0) * jacobi_eval(JacobiParam{-a - 1.0, b - 1.0, m}, x) *
                    jacobi_eval(JacobiParam{a + 2.0, b, j - 1}, x);
    const T second = c2 * jacobi_eval(JacobiParam{-a - 2.0, b, m}, x) *
                     jacobi_eval(JacobiParam{a + 1.0, b - 1.0, j}, x);
    return sign * (first + second);
}

OdeCoefficients ode_coefficients(const EopIndex& idx, double x) {
    const double a = idx.a;
    const double b = idx.b;
    const int m = idx.m;
    const double n = idx.n;
    const double den = jacobi_eval(denominator_param(a, b, m), x);
    if (std::abs(den) < kSingularTolerance) {
        throw SingularPoint("exceptional weight denominator vanishes", x);
    }
    const double ratio = jacobi_eval(JacobiParam{-a, b, m - 1}, x) / den;
    const double t = a - b - m + 1.0;
    OdeCoefficients c;
    c.q1 = t * (1.0 - x * x) * ratio - (a + 1.0) * (1.0 + x) + (b + 1.0) * (1.0 - x);
    c.r1 = b * t * (1.0 - x) * ratio + n * n + n * (a + b - 2.0 * m + 1.0) - 2.0 * b * m;
    return c;
}

double ode_operator(const EopIndex& idx, double x, const Jet<double>& y) {
    const OdeCoefficients c = ode_coefficients(idx, x);
    return (1.0 - x * x) * y.d2 + c.q1 * y.d1 + c.r1 * y.value;
}

double eop_ode_residual(const EopIndex& idx, double x) {
    return std::abs(ode_operator(idx, x, eop_jet(idx, x)));
}

double eop_weight(double a, double b, int m, double x, double one_minus_x, double one_plus_x) {
    const double den = jacobi_eval(denominator_param(a, b, m), x);
    if (std::abs(den) < kSingularTolerance) {
        throw SingularPoint("exceptional weight denominator vanishes", x);
    }
    return std::pow(one_minus_x, a) * std::pow(one_plus_x, b) / (den * den);
}

double eop_weight(double a, double b, int m, double x) {
    if (!(std::abs(x) < 1.0)) throw InvalidArgument("weight is evaluated on the open interval (-1, 1)");
    return eop_weight(a, b, m, x, 1.0 - x, 1.0 + x);
}

double eop_norm_sq(const EopIndex& idx) {
    const double a = idx.a;
    const double b = idx.b;
    const int m = idx.m;
    const int n = idx.n;
    if (m < 0 || n < m) throw InvalidArgument("norm requires 0 <= m <= n");
    const int j = n - m;
    const double pow2 = std::pow(2.0, a + b + 1.0);

    // (2j+a+b+1) G(j+a+b+1) collapses to G(a+b+2) at j = 0
    double tail;
    if (j == 0) {
        tail = gamma_checked(a + b + 2.0);
    } else {
        require_nonzero(2.0 * j + a + b + 1.0, "2j + a + b + 1 = 0 in closed-form norm");
        tail = (2.0 * j + a + b + 1.0) * gamma_checked(j + a + b + 1.0);
    }
    const double jfact = std::tgamma(j + 1.0);

    if (m == 0) {
        return pow2 * gamma_checked(n + a + 1.0) * gamma_checked(n + b + 1.0) / (jfact * tail);
    }
    require_nonzero(j + a + 1.0, "n - m + a + 1 = 0 in closed-form norm");
    const double num = (n + b) * (n - 2.0 * m + a + 1.0) * gamma_checked(j + a + 2.0) *
                       gamma_checked(j + b);
    return pow2 * num / ((j + a + 1.0) * (j + a + 1.0) * jfact * tail);
}

double eop_inner_product(const EopIndex& first, const EopIndex& second, int quad_order) {
    if (first.a != second.a || first.b != second.b || first.m != second.m) {
        throw InvalidArgument("inner product needs a shared (a, b, m) family");
    }
    if (quad_order < 1) throw InvalidArgument("quadrature order must be >= 1");
    const double a = first.a;
    const double b = first.b;
    const int m = first.m;
    if (!admissible(a, b, m)) throw InvalidArgument("inadmissible parameters (a, b, m)");
    const GradedRule& rule = cached_rule(quad_order, grading_for_exponents(a, b));

    const std::size_t count = rule.nodes.size();
    std::vector<double> w(count), f(count), g(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double x = rule.nodes[i];
        w[i] = rule.weights[i] * eop_weight(a, b, m, x, rule.one_minus[i], rule.one_plus[i]);
        f[i] = eop_eval(first, x);
        g[i] = first.n == second.n ? f[i] : eop_eval(second, x);
    }
    return kernels::active().weighted_dot(w, f, g);
}

int default_quad_order() {
    const char* env = std::getenv("XMSCARF_QUAD_ORDER");
    if (env == nullptr || *env == '\0') return 200;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 10 || v > 100000) {
        throw InvalidArgument(std::string("XMSCARF_QUAD_ORDER must be an integer >= 10, got '") + env + "'");
    }
    return static_cast<int>(v);
}

template double eop_eval(const EopIndex&, double);
template Complex eop_eval(const EopIndex&, Complex);
template Jet<double> eop_jet(const EopIndex&, double);
template Jet<Complex> eop_jet(const EopIndex&, Complex);

} // namespace xmscarf
