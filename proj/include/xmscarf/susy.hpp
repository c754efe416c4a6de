#pragma once

#include "xmscarf/potentials.hpp"

namespace xmscarf {

enum class PartnerSign { Minus, Plus };

/// A trigonometric family member viewed as the V^- partner of a SUSY pair.
struct SusyPair {
    PotentialSpec spec;
    double factorization_energy = 0.0;  ///< k^2 (a+b+1)^2 / 4
};

SusyPair make_susy_pair(const PotentialSpec& spec);

/// W(x) with V^-(x) = W^2 - W' = V(x) - factorization energy. Throws
/// SingularPoint when P_m^(-a-1,b-1) or P_m^(-a-2,b) vanishes at sin kx.
double superpotential(const PotentialSpec& spec, double x);

/// dW/dx from the closed form (quotient rule on the polynomial ratios).
double superpotential_derivative(const PotentialSpec& spec, double x);

/// W^2 -+ W'
double partner_potential(const PotentialSpec& spec, PartnerSign sign, double x);

/// The simplified closed forms of V^- and V^+ written out term by term.
double partner_potential_closed_form(const PotentialSpec& spec, PartnerSign sign, double x);

/// |V^+(a, b; x) - V^-(a+1, b+1; x) - k^2 (a+b+2)|
double shape_invariance_defect(const PotentialSpec& spec, double x);

/// k^2 (a+b+2), the x-independent remainder of the shape-invariance relation.
double shape_invariance_remainder(const PotentialSpec& spec);

} // namespace xmscarf
