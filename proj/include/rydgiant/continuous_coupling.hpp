#pragma once

#include "rydgiant/pair_model.hpp"

namespace rydgiant {

/// Waveguide constants for two atoms whose couplings are spread as
/// nu(x) = sqrt(Gamma)/theta * exp(-2|x - center|/theta) around phases 0 and phi.
struct CouplingRates {
    double Gamma_eff = 0.0;     // Gamma'
    double Gamma_ex_eff = 0.0;  // Gamma'_ex
    double J_ex_eff = 0.0;      // J'_ex
    double J_self = 0.0;        // J', equal shift of both single-excitation states
    double theta = 0.0;         // width (rad)
};

/// Closed forms; theta == 0 returns the point-coupling rates
/// (Gamma, Gamma cos phi, Gamma sin phi, 0). Throws std::invalid_argument for
/// theta < 0, or phi <= 0 with theta > 0.
CouplingRates continuous_rates(double Gamma, Phase phi, double theta);

/// The same four constants from the defining double integrals, evaluated by
/// nested adaptive Gauss-Kronrod quadrature to absolute accuracy
/// tol * Gamma'. Throws NumericalError with the achieved error estimate if
/// that cannot be reached.
CouplingRates quadrature_rates(double Gamma, Phase phi, double theta, double tol = 1e-9);

/// Largest |a - b| over the four rates, divided by max(|b_k|, b.Gamma_eff).
/// Rates that vanish identically (e.g. Gamma'_ex at phi = (m + 1/2) pi) are
/// compared against the Gamma' scale rather than against zero.
double max_relative_difference(const CouplingRates& a, const CouplingRates& b);

ChannelRates to_channel_rates(const CouplingRates& rates);

/// Upsilon' = (Gamma' + Gamma'_ex + i J' + i J'_ex) |Omega_c|^2 / Delta_c^2.
Complex upsilon_continuous(const PairParams& params, const CouplingRates& rates);

ComplexMatrix continuous_pair_rhs(const PairParams& params, const CouplingRates& rates,
                                  const DensityMatrix& rho);
ComplexMatrix continuous_pair_rhs(const PairParams& params, const CouplingRates& rates,
                                  const ComplexMatrix& rho);
Lindbladian continuous_pair_lindbladian(const PairParams& params, const CouplingRates& rates);

}  // namespace rydgiant
