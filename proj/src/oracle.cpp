#include "xmscarf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "xmscarf/errors.hpp"
#include "xmscarf/numerics.hpp"

namespace xmscarf {

namespace {

void require_grid(const GridSpec& grid) {
    if (!(grid.x_min < grid.x_max)) throw InvalidArgument("grid requires x_min < x_max");
    if (grid.n_points < 5) throw InvalidArgument("grid requires at least 5 points");
}

std::vector<double> dirichlet_eigenvalues(const RealPotential& v, const GridSpec& grid, int count) {
    require_grid(grid);
    const int inner = grid.n_points - 2;
    if (count < 1 || count > inner) throw InvalidArgument("eigenvalue count out of range for this grid");
    const double h = grid.spacing();
    const double inv_h2 = 1.0 / (h * h);
    TridiagonalSystem sys;
    sys.diagonal.resize(inner);
    sys.off_diagonal.assign(inner - 1, -inv_h2);
    for (int i = 0; i < inner; ++i) {
        const double x = grid.at(i + 1);
        const double vx = v(x);
        if (!std::isfinite(vx)) throw SingularPoint("potential is not finite", x);
        sys.diagonal[i] = 2.0 * inv_h2 + vx;
    }
    return eigen_sym_tridiag(sys, count);
}

RealPotential real_potential(const PotentialSpec& spec) {
    validate(spec);
    if (spec.family == Family::ShiftedTrigScarf) {
        throw InvalidArgument("the shifted family is certified through eigenpair residuals, not diagonalization");
    }
    return [spec](double x) {
        const Complex v = potential_value(spec, x);
        if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v.real()))) {
            throw InvalidArgument("potential has a nonzero imaginary part at x = " + std::to_string(x));
        }
        return v.real();
    };
}

} // namespace

GridSpec trig_grid(double k, int n_points, double margin) {
    const double half = std::numbers::pi / (2.0 * k);
    return {-half * (1.0 - margin), half * (1.0 - margin), n_points};
}

GridSpec symmetric_grid(double half_width, int n_points) {
    return {-half_width, half_width, n_points};
}

SpectrumResult solve_spectrum(const RealPotential& v, const GridSpec& grid, int count, bool richardson) {
    SpectrumResult result;
    result.grid = grid;
    result.coarse = dirichlet_eigenvalues(v, grid, count);
    if (!richardson) {
        result.eigenvalues = result.coarse;
        return result;
    }
    GridSpec fine = grid;
    fine.n_points = 2 * (grid.n_points - 1) + 1;
    result.richardson_grid = fine;
    result.fine = dirichlet_eigenvalues(v, fine, count);
    result.eigenvalues.resize(count);
    for (int i = 0; i < count; ++i) {
        result.eigenvalues[i] = (4.0 * result.fine[i] - result.coarse[i]) / 3.0;
    }
    return result;
}

SpectrumResult solve_spectrum(const PotentialSpec& spec, const GridSpec& grid, int count, bool richardson) {
    return solve_spectrum(real_potential(spec), grid, count, richardson);
}

EigenpairCheck check_eigenpair(const PotentialSpec& spec, int n, const GridSpec& grid) {
    require_grid(grid);
    const double e = energy(spec, n);
    const int np = grid.n_points;
    std::vector<double> re(np), im(np);
    std::vector<Complex> psi(np), vpsi(np);
    double psi_max = 0.0;
    for (int i = 0; i < np; ++i) {
        const double x = grid.at(i);
        psi[i] = wavefunction(spec, n, x);
        vpsi[i] = potential_value(spec, x) * psi[i];
        re[i] = psi[i].real();
        im[i] = psi[i].imag();
        psi_max = std::max(psi_max, std::abs(psi[i]));
    }
    if (!(psi_max > 0.0)) throw ConvergenceFailure("wavefunction vanishes on the grid");
    const double h = grid.spacing();
    const std::vector<double> d2re = fd_second_derivative(re, h);
    const std::vector<double> d2im = fd_second_derivative(im, h);

    EigenpairCheck out;
    Complex numerator{};
    double denominator = 0.0;
    for (int i = 0; i < np; ++i) {
        const Complex hpsi = -Complex(d2re[i], d2im[i]) + vpsi[i];
        out.residual = std::max(out.residual, std::abs(hpsi - e * psi[i]));
        numerator += std::conj(psi[i]) * hpsi;
        denominator += std::norm(psi[i]);
    }
    out.residual /= psi_max;
    out.rayleigh = numerator / denominator;
    out.edge_ratio = std::max(std::abs(psi.front()), std::abs(psi.back())) / psi_max;
    return out;
}

double hamiltonian_residual(const PotentialSpec& spec, int n, const GridSpec& grid) {
    return check_eigenpair(spec, n, grid).residual;
}

double hyperbolic_truncation(const PotentialSpec& spec, int n, double rel_tol) {
    if (spec.family != Family::HyperbolicScarf) throw InvalidArgument("truncation applies to the hyperbolic family");
    energy(spec, n);
    constexpr int kSamples = 2001;
    for (double half = 1.0 / spec.k; half < 1e3 / spec.k; half *= 1.05) {
        const GridSpec g = symmetric_grid(half, kSamples);
        double peak = 0.0;
        for (int i = 0; i < kSamples; ++i) peak = std::max(peak, std::abs(wavefunction(spec, n, g.at(i))));
        const double edge = std::max(std::abs(wavefunction(spec, n, -half)), std::abs(wavefunction(spec, n, half)));
        if (edge < rel_tol * peak) return half;
    }
    throw ConvergenceFailure("wavefunction does not decay within the search range");
}

VerificationReport compare_spectrum(const std::vector<double>& numeric, const std::vector<double>& expected,
                                    double rel_tol) {
    VerificationReport report{"spectrum", {}};
    if (numeric.size() != expected.size()) {
        report.expect("level count", false,
                      std::to_string(numeric.size()) + " numeric vs " + std::to_string(expected.size()) + " expected");
        return report;
    }
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        const double err = std::abs(numeric[i] - expected[i]) / std::max(std::abs(expected[i]), 1e-300);
        report.check("level " + std::to_string(i), err, rel_tol,
                     "numeric " + std::to_string(numeric[i]) + " expected " + std::to_string(expected[i]));
    }
    return report;
}

VerificationReport spectrum_match_report(const PotentialSpec& spec, int count, double rel_tol, int n_points) {
    const GridSpec grid = spec.family == Family::TrigScarf
                              ? trig_grid(spec.k, n_points)
                              : symmetric_grid(hyperbolic_truncation(spec, spec.m + count - 1), n_points);
    const SpectrumResult numeric = solve_spectrum(spec, grid, count, true);
    std::vector<double> expected;
    for (int j = 0; j < count; ++j) expected.push_back(energy(spec, spec.m + j));
    VerificationReport report = compare_spectrum(numeric.eigenvalues, expected, rel_tol);
    report.name = std::string("spectrum ") + family_name(spec.family) + " m=" + std::to_string(spec.m);
    return report;
}

} // namespace xmscarf
