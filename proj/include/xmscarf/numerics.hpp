#pragma once

#include <span>
#include <vector>

namespace xmscarf {

namespace kernels {
struct KernelTable;
}

/// Gauss-Legendre rule on [-1, 1]; nodes strictly increasing.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes are Legendre roots found by Newton iteration from Chebyshev-type
/// initial guesses. Throws ConvergenceFailure if an iteration stalls.
QuadratureRule gauss_legendre(int order);

/// Gauss-Legendre applied after the substitution x = 2 I_{(1+t)/2}(p, p) - 1,
/// I the regularized incomplete beta function. Near x = +-1 the map behaves
/// like (1 -+ t)^p, which turns an integrable (1 -+ x)^c endpoint factor into
/// (1 -+ t)^(p(c+1)-1). The distances to both endpoints are stored separately
/// so that (1-x)^c stays accurate for c < 0.
struct GradedRule {
    std::vector<double> nodes;
    std::vector<double> one_minus;
    std::vector<double> one_plus;
    std::vector<double> weights;  ///< Gauss weight times dx/dt; sums to 2
    int grading = 1;
};

GradedRule graded_gauss_legendre(int order, int grading);

/// Grading strong enough for an integrand carrying (1-x)^a (1+x)^b, a, b > -1.
int grading_for_exponents(double a, double b);

struct TridiagonalSystem {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;  ///< length diagonal.size() - 1
};

/// The `count` smallest eigenvalues, ascending, by Sturm-sequence bisection
/// (four brackets per sweep through the SIMD kernel).
std::vector<double> eigen_sym_tridiag(const TridiagonalSystem& sys, int count);

/// Same, with the Sturm kernel taken from an explicit table.
std::vector<double> eigen_sym_tridiag(const TridiagonalSystem& sys, int count, const kernels::KernelTable& kt);

/// Eigenvalue count below `shift`, scalar reference used by tests.
int sturm_count(const TridiagonalSystem& sys, double shift);

/// Fourth-order second derivative of uniformly spaced samples: central
/// (-1, 16, -30, 16, -1)/12h^2 inside, six-point one-sided formulas on the
/// two outermost points at each end (five-point when only 5 samples exist).
std::vector<double> fd_second_derivative(std::span<const double> values, double h);

} // namespace xmscarf
