#pragma once

#include "rydgiant/phase.hpp"
#include "rydgiant/quantum_core.hpp"

#include <string>
#include <vector>

namespace rydgiant {

/// Two driven Rydberg atoms coupled to a waveguide, in the rotating frame.
/// Rates and detunings are in 1/us, read as angular frequencies.
struct PairParams {
    double gamma = 0.0;            // decay into non-guided modes
    double Gamma = 0.0;            // decay into guided modes
    Complex Omega_c{0.0, 0.0};     // drive on |r1g2>,|g1r2> <-> |r1r2>
    double Delta_c = 0.0;          // drive detuning from the vdW-shifted transition
    Phase phi;                     // accumulated phase between the contact points
    double V6 = 0.0;               // vdW shift; bookkeeping only, absorbed into Delta_c
};

/// Waveguide-mediated exchange: J_ex = Gamma sin(phi), Gamma_ex = Gamma cos(phi).
struct ExchangeRates {
    double J_ex = 0.0;
    double Gamma_ex = 0.0;
};

/// Rates entering the pair generator. Point couplings give
/// {Gamma, Gamma cos phi, Gamma sin phi, 0}; extended couplings modify all
/// four and add the self shift J_self on both single-excitation states.
struct ChannelRates {
    double Gamma = 0.0;
    double Gamma_ex = 0.0;
    double J_ex = 0.0;
    double J_self = 0.0;
};

// Fixed two-atom basis ordering.
enum PairState : Eigen::Index { kGG = 0, kR1G2 = 1, kG1R2 = 2, kRR = 3 };

const std::vector<std::string>& pair_basis();  // {"gg", "r1g2", "g1r2", "rr"}

/// sigma_-^j for j = 1..4:
///   1: |g1g2><r1g2|   2: |g1g2><g1r2|   3: |r1g2><r1r2|   4: |g1r2><r1r2|
ComplexMatrix pair_lowering(int j);
ComplexMatrix pair_raising(int j);

void validate(const PairParams& params);  // throws std::invalid_argument

ExchangeRates exchange_rates(const PairParams& params);
ChannelRates point_channel_rates(const PairParams& params);

/// [[Gamma, Gamma_ex], [Gamma_ex, Gamma]]; PSD is the complete-positivity
/// condition on the collective waveguide channel.
Eigen::Matrix2d dissipation_matrix(const ChannelRates& rates);

ComplexMatrix atomic_hamiltonian(const PairParams& params);
ComplexMatrix atomic_hamiltonian(const PairParams& params, const ChannelRates& rates);

/// Operator-algebra master equation right-hand side. The DensityMatrix
/// overloads reject states whose trace or Hermiticity is off by more than
/// 1e-6; the ComplexMatrix overloads evaluate the linear map on any input.
ComplexMatrix pair_rhs(const PairParams& params, const DensityMatrix& rho);
ComplexMatrix pair_rhs(const PairParams& params, const ComplexMatrix& rho);
ComplexMatrix pair_rhs(const PairParams& params, const ChannelRates& rates, const ComplexMatrix& rho);

/// Element-by-element expansion of the same equation, coded independently of
/// the operator form and used to cross-check it.
ComplexMatrix expanded_rhs(const PairParams& params, const DensityMatrix& rho);
ComplexMatrix expanded_rhs(const PairParams& params, const ComplexMatrix& rho);

/// Compiled generator for the integrator.
Lindbladian pair_lindbladian(const PairParams& params);
Lindbladian pair_lindbladian(const PairParams& params, const ChannelRates& rates);

/// Human-readable warnings about the validity regime (e.g. Delta_c not << V6).
std::vector<std::string> regime_warnings(const PairParams& params);

namespace detail {
void require_rhs_input(const DensityMatrix& rho, Eigen::Index dim, const char* who);
}

}  // namespace rydgiant
