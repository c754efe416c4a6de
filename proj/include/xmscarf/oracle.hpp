#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "xmscarf/potentials.hpp"
#include "xmscarf/report.hpp"

namespace xmscarf {

/// Uniform grid including both Dirichlet endpoints.
struct GridSpec {
    double x_min = 0.0;
    double x_max = 1.0;
    int n_points = 1001;

    double spacing() const { return (x_max - x_min) / (n_points - 1); }
    double at(int i) const { return x_min + i * spacing(); }
};

/// Endpoint margin of the trigonometric grid, as a fraction of pi/2k.
inline constexpr double kTrigMargin = 1e-3;

/// Margin for pointwise residual checks on the trigonometric family. Close to
/// the walls the eigenfunctions behave like a fractional power of the
/// distance, which the fixed-width stencil cannot resolve.
inline constexpr double kResidualMargin = 0.05;

/// (-pi/2k + d, pi/2k - d) with d = margin * pi/2k.
GridSpec trig_grid(double k, int n_points, double margin = kTrigMargin);

/// [-half_width, half_width].
GridSpec symmetric_grid(double half_width, int n_points);

struct SpectrumResult {
    std::vector<double> eigenvalues;
    GridSpec grid;
    std::optional<GridSpec> richardson_grid;  ///< the doubled grid when extrapolated
    std::vector<double> coarse;
    std::vector<double> fine;
};

using RealPotential = std::function<double(double)>;

/// Lowest `count` eigenvalues of -d^2/dx^2 + V with Dirichlet walls at the
/// grid ends, three-point second difference. With `richardson`, the grid is
/// also solved with the interval count doubled and (4 E_fine - E_coarse)/3
/// is returned.
SpectrumResult solve_spectrum(const RealPotential& v, const GridSpec& grid, int count, bool richardson);

/// Same for a family member. Requires a real potential on the grid
/// (TrigScarf, or a hyperbolic instance whose imaginary part vanishes).
SpectrumResult solve_spectrum(const PotentialSpec& spec, const GridSpec& grid, int count, bool richardson);

/// Diagnostics of an analytic eigenpair sampled on a grid.
struct EigenpairCheck {
    double residual = 0.0;       ///< max |H psi - E psi| / max |psi|
    Complex rayleigh{};          ///< sum conj(psi) H psi / sum |psi|^2
    double edge_ratio = 0.0;     ///< max(|psi(x_min)|, |psi(x_max)|) / max |psi|
};

/// Applies -psi'' (fourth-order stencil on real and imaginary parts) plus
/// V psi to the analytic psi_n. Throws SingularPoint and NoSuchBoundState.
EigenpairCheck check_eigenpair(const PotentialSpec& spec, int n, const GridSpec& grid);

double hamiltonian_residual(const PotentialSpec& spec, int n, const GridSpec& grid);

/// Half-width L with |psi_n(+-L)| < rel_tol * max |psi_n| for the hyperbolic family.
double hyperbolic_truncation(const PotentialSpec& spec, int n, double rel_tol = 1e-8);

/// Per-level relative error of numeric against expected.
VerificationReport compare_spectrum(const std::vector<double>& numeric, const std::vector<double>& expected,
                                    double rel_tol);

/// Oracle eigenvalues of a trigonometric spec against energy(spec, n),
/// Richardson-extrapolated from n_points / 2 n_points - 1.
VerificationReport spectrum_match_report(const PotentialSpec& spec, int count, double rel_tol, int n_points = 4001);

} // namespace xmscarf
