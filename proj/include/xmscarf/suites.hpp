#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xmscarf/potentials.hpp"
#include "xmscarf/report.hpp"

namespace xmscarf::suites {

/// Parameters supplied on the command line. When a, b (and m) are given the
/// suite checks that instance instead of its built-in battery.
struct UserParams {
    std::optional<int> m;
    std::optional<double> a;
    std::optional<double> b;
    double k = 1.0;
    std::optional<Family> family;
    std::optional<double> eps;
    int quad_order = 0;  ///< 0 selects default_quad_order()

    bool has_triple() const { return a.has_value() && b.has_value(); }
};

/// Admissible (a, b) pairs for codimension m in {1, 2, 3, 4}, five each,
/// all with a, b > -1.
std::vector<std::pair<double, double>> admissible_battery(int m);

VerificationReport identities(const UserParams& p = {});
VerificationReport orthogonality(const UserParams& p = {});
VerificationReport ode(const UserParams& p = {});
VerificationReport shape_invariance(const UserParams& p = {});
VerificationReport pt(const UserParams& p = {});
VerificationReport quasi_hermitian(const UserParams& p = {});
VerificationReport oracle(const UserParams& p = {});
VerificationReport closed_forms(const UserParams& p = {});
VerificationReport hyperbolic(const UserParams& p = {});
VerificationReport kernels(const UserParams& p = {});

const std::vector<std::string>& suite_names();

/// Dispatch by name; "all" concatenates every suite. Throws InvalidArgument
/// for an unknown name.
VerificationReport run(const std::string& name, const UserParams& p = {});

} // namespace xmscarf::suites
