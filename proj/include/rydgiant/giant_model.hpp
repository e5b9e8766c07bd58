#pragma once

#include "rydgiant/pair_model.hpp"

#include <string>
#include <vector>

namespace rydgiant {

/// Effective two-level giant atom formed by the adiabatically eliminated
/// pair. Basis {|g>, |r>} with |r> standing for |r1r2>.
struct GiantParams {
    double gamma = 0.0;
    Complex Upsilon{0.0, 0.0};
};

const std::vector<std::string>& giant_basis();  // {"g", "r"}

/// Upsilon = (Gamma + Gamma_ex + i J_ex) |Omega_c|^2 / Delta_c^2.
/// Throws std::invalid_argument when Delta_c == 0.
Complex upsilon(const PairParams& params);
GiantParams giant_params(const PairParams& params);

void validate(const GiantParams& params);

ComplexMatrix giant_rhs(const GiantParams& params, const DensityMatrix& rho);
ComplexMatrix giant_rhs(const GiantParams& params, const ComplexMatrix& rho);

/// 2 gamma L[s-] plus the Upsilon channel, in Lindblad form for the integrator.
Lindbladian giant_lindbladian(const GiantParams& params);

/// rr0 * exp(-(2 Re Upsilon + 2 gamma) t).
double giant_population_analytic(const GiantParams& params, double t, double rr0);

}  // namespace rydgiant
