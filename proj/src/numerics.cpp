#include "xmscarf/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "xmscarf/errors.hpp"
#include "xmscarf/kernels.hpp"

namespace xmscarf {

namespace {

struct LegendreValue {
    double p;
    double dp;
};

LegendreValue legendre_with_derivative(int n, double x) {
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    const double p = n == 0 ? 1.0 : p1;
    const double prev = n == 0 ? 0.0 : p0;
    // derivative from the standard identity (1-x^2) P_n' = n (P_{n-1} - x P_n)
    const double dp = n * (prev - x * p) / (1.0 - x * x);
    return {p, dp};
}

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

/// I_z(p, p) for integer p: a finite binomial tail, all terms positive.
double incomplete_beta_symmetric(double z, int p) {
    if (z <= 0.0) return 0.0;
    if (z >= 1.0) return 1.0;
    const int top = 2 * p - 1;
    const double lz = std::log(z);
    const double l1z = std::log1p(-z);
    double s = 0.0;
    for (int j = p; j <= top; ++j) {
        s += std::exp(log_binomial(top, j) + j * lz + (top - j) * l1z);
    }
    return s;
}

} // namespace

QuadratureRule gauss_legendre(int order) {
    if (order < 1) throw InvalidArgument("quadrature order must be >= 1");
    QuadratureRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // i-th largest root
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        bool converged = false;
        LegendreValue lv{};
        for (int iter = 0; iter < 100; ++iter) {
            lv = legendre_with_derivative(order, x);
            const double dx = lv.p / lv.dp;
            x -= dx;
            if (std::abs(dx) <= 1e-15) {
                converged = true;
                break;
            }
        }
        if (!converged) throw ConvergenceFailure("Gauss-Legendre Newton iteration stalled");
        lv = legendre_with_derivative(order, x);
        const double w = 2.0 / ((1.0 - x * x) * lv.dp * lv.dp);
        rule.nodes[order - 1 - i] = x;
        rule.nodes[i] = -x;
        rule.weights[order - 1 - i] = w;
        rule.weights[i] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    return rule;
}

GradedRule graded_gauss_legendre(int order, int grading) {
    if (grading < 1) throw InvalidArgument("grading must be >= 1");
    const QuadratureRule base = gauss_legendre(order);
    const int p = grading;
    // dx/dt = (1-t^2)^(p-1) / (4^(p-1) B(p,p))
    const double log_norm = (p - 1) * std::log(4.0) + 2.0 * std::lgamma(p) - std::lgamma(2.0 * p);
    GradedRule rule;
    rule.grading = p;
    rule.nodes.resize(order);
    rule.one_minus.resize(order);
    rule.one_plus.resize(order);
    rule.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        const double t = base.nodes[i];
        const double om = 2.0 * incomplete_beta_symmetric(0.5 * (1.0 - t), p);
        const double op = 2.0 * incomplete_beta_symmetric(0.5 * (1.0 + t), p);
        rule.one_minus[i] = om;
        rule.one_plus[i] = op;
        rule.nodes[i] = om < op ? 1.0 - om : op - 1.0;
        const double jac = std::exp((p - 1) * std::log1p(-t * t) - log_norm);
        rule.weights[i] = base.weights[i] * jac;
    }
    return rule;
}

int grading_for_exponents(double a, double b) {
    if (a <= -1.0 || b <= -1.0) {
        throw InvalidArgument("endpoint exponents must exceed -1 for quadrature");
    }
    // mapped endpoint factor (1-t)^(p(c+1)-1) gets exponent >= 3
    const double c = std::min({a, b, 0.0});
    const int p = static_cast<int>(std::ceil(4.0 / (c + 1.0)));
    return std::clamp(p, 4, 64);
}

std::vector<double> eigen_sym_tridiag(const TridiagonalSystem& sys, int count) {
    return eigen_sym_tridiag(sys, count, kernels::active());
}

int sturm_count(const TridiagonalSystem& sys, double shift) {
    const std::size_t n = sys.diagonal.size();
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e2 = i == 0 ? 0.0 : sys.off_diagonal[i - 1] * sys.off_diagonal[i - 1];
        q = (sys.diagonal[i] - shift) - (i == 0 ? 0.0 : e2 / q);
        if (q == 0.0) q = -1e-300;
        if (q < 0.0) ++count;
    }
    return count;
}

std::vector<double> eigen_sym_tridiag(const TridiagonalSystem& sys, int count, const kernels::KernelTable& kt) {
    const std::size_t n = sys.diagonal.size();
    if (n == 0) throw InvalidArgument("empty tridiagonal system");
    if (sys.off_diagonal.size() + 1 != n) {
        throw InvalidArgument("off-diagonal length must be dimension - 1");
    }
    if (count < 0 || static_cast<std::size_t>(count) > n) {
        throw InvalidArgument("eigenvalue count exceeds dimension");
    }

    std::vector<double> off_sq(n > 1 ? n - 1 : 0);
    double lo = sys.diagonal[0];
    double hi = sys.diagonal[0];
    double max_e2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double left = i > 0 ? std::abs(sys.off_diagonal[i - 1]) : 0.0;
        const double right = i + 1 < n ? std::abs(sys.off_diagonal[i]) : 0.0;
        lo = std::min(lo, sys.diagonal[i] - left - right);
        hi = std::max(hi, sys.diagonal[i] + left + right);
        if (i + 1 < n) {
            off_sq[i] = sys.off_diagonal[i] * sys.off_diagonal[i];
            max_e2 = std::max(max_e2, off_sq[i]);
        }
    }
    const double norm = std::max(std::abs(lo), std::abs(hi));
    const double eps = std::numeric_limits<double>::epsilon();
    const double pivmin = std::max(std::numeric_limits<double>::min() * std::max(1.0, max_e2),
                                   std::numeric_limits<double>::min());
    const double tol = 2.0 * eps * std::max(norm, 1e-300);
    lo -= tol + 2.0 * eps * norm;
    hi += tol + 2.0 * eps * norm;

    std::vector<double> result(count);
    for (int first = 0; first < count; first += 4) {
        std::array<double, 4> left{lo, lo, lo, lo};
        std::array<double, 4> right{hi, hi, hi, hi};
        std::array<int, 4> target{};
        for (int l = 0; l < 4; ++l) target[l] = std::min(first + l, count - 1) + 1;
        bool converged = false;
        for (int iter = 0; iter < 200 && !converged; ++iter) {
            bool done = true;
            std::array<double, 4> mid{};
            for (int l = 0; l < 4; ++l) {
                mid[l] = 0.5 * (left[l] + right[l]);
                if (right[l] - left[l] > tol && mid[l] != left[l] && mid[l] != right[l]) done = false;
            }
            if (done) {
                converged = true;
                break;
            }
            std::array<int, 4> below{};
            kt.sturm_count4(sys.diagonal, off_sq, mid.data(), pivmin, below.data());
            for (int l = 0; l < 4; ++l) {
                if (below[l] >= target[l]) {
                    right[l] = mid[l];
                } else {
                    left[l] = mid[l];
                }
            }
        }
        if (!converged) throw ConvergenceFailure("tridiagonal bisection did not converge");
        for (int l = 0; l < 4 && first + l < count; ++l) result[first + l] = 0.5 * (left[l] + right[l]);
    }
    return result;
}

std::vector<double> fd_second_derivative(std::span<const double> values, double h) {
    const std::size_t n = values.size();
    if (n < 5) throw InvalidArgument("fd_second_derivative needs at least 5 samples");
    if (!(h > 0.0)) throw InvalidArgument("grid spacing must be positive");
    const double scale = 1.0 / (12.0 * h * h);
    std::vector<double> out(n);
    kernels::active().fd2_interior(values, out, scale);
    const auto& f = values;
    if (n >= 6) {
        auto edge0 = [&](auto at) {
            return (45.0 * at(0) - 154.0 * at(1) + 214.0 * at(2) - 156.0 * at(3) + 61.0 * at(4) -
                    10.0 * at(5)) * scale;
        };
        auto edge1 = [&](auto at) {
            return (10.0 * at(0) - 15.0 * at(1) - 4.0 * at(2) + 14.0 * at(3) - 6.0 * at(4) + at(5)) *
                   scale;
        };
        auto fwd = [&](std::size_t i) { return f[i]; };
        auto bwd = [&](std::size_t i) { return f[n - 1 - i]; };
        out[0] = edge0(fwd);
        out[1] = edge1(fwd);
        out[n - 1] = edge0(bwd);
        out[n - 2] = edge1(bwd);
    } else {
        auto edge0 = [&](auto at) {
            return (35.0 * at(0) - 104.0 * at(1) + 114.0 * at(2) - 56.0 * at(3) + 11.0 * at(4)) * scale;
        };
        auto edge1 = [&](auto at) {
            return (11.0 * at(0) - 20.0 * at(1) + 6.0 * at(2) + 4.0 * at(3) - at(4)) * scale;
        };
        auto fwd = [&](std::size_t i) { return f[i]; };
        auto bwd = [&](std::size_t i) { return f[n - 1 - i]; };
        out[0] = edge0(fwd);
        out[1] = edge1(fwd);
        out[n - 1] = edge0(bwd);
        out[n - 2] = edge1(bwd);
    }
    return out;
}

} // namespace xmscarf
