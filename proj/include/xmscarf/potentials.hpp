#pragma once

#include "xmscarf/jacobi.hpp"

namespace xmscarf {

enum class Family {
    TrigScarf,         ///< real rationally extended Scarf I well on (-pi/2k, pi/2k)
    ShiftedTrigScarf,  ///< the same family at kx + i eps, on the whole line
    HyperbolicScarf,   ///< PT-symmetric family with argument i sinh kx
};

const char* family_name(Family f);

/// Descriptor of one member of a potential family. `eps` is used by
/// ShiftedTrigScarf only.
struct PotentialSpec {
    Family family = Family::TrigScarf;
    int m = 0;
    double a = 0.0;
    double b = 0.0;
    double k = 1.0;
    double eps = 0.0;

    static PotentialSpec trig(int m, double a, double b, double k);
    static PotentialSpec shifted(int m, double a, double b, double k, double eps);
    static PotentialSpec hyperbolic(int m, double a, double b, double k);
};

/// Throws InvalidArgument naming the violated condition: m >= 0, finite
/// parameters, k > 0, and admissible (a, b, m) for the real trigonometric family.
void validate(const PotentialSpec& spec);

struct Domain {
    double lo;
    double hi;
    bool bounded;
};

Domain domain(const PotentialSpec& spec);

/// Distance from the endpoints of the trigonometric domain below which
/// evaluation is refused.
inline constexpr double kEndpointGuard = 1e-9;

/// V(x) of the family. Exactly real for TrigScarf. Throws SingularPoint when
/// P_m^(-a-1,b-1) vanishes at the polynomial argument.
Complex potential_value(const PotentialSpec& spec, double x);

/// The trigonometric expression at an arbitrary complex coordinate, using
/// library complex sin/cos. Used to check the imaginary-shift similarity.
Complex trig_scarf_continued(int m, double a, double b, double k, Complex x);

/// (k^2/4)(2n-2m+a+b+1)^2 for the trigonometric families, the negative of it
/// for the hyperbolic family. Throws NoSuchBoundState for n < m and, for the
/// hyperbolic family, n >= m - (a+b+1)/2.
double energy(const PotentialSpec& spec, int n);

/// Number of n >= m with n < m - (a+b+1)/2.
int hyperbolic_bound_count(const PotentialSpec& spec);

/// sqrt(k / ||\hat P_n||^2) for the trigonometric families; 1 for the
/// hyperbolic family, whose eigenfunctions are left unnormalized.
double normalization_constant(const PotentialSpec& spec, int n);

struct BoundState {
    int n = 0;
    double energy = 0.0;
    double norm_const = 1.0;
};

BoundState bound_state(const PotentialSpec& spec, int n);

/// psi_n(x). Complex powers use the principal branch.
Complex wavefunction(const PotentialSpec& spec, int n, double x);

/// |conj(V(-x)) - V(x)|
double pt_defect(const PotentialSpec& spec, double x);

} // namespace xmscarf
