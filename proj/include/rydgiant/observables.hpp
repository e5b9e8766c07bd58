#pragma once

#include "rydgiant/integrator.hpp"
#include "rydgiant/pair_model.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rydgiant {

/// Wootters concurrence C = max(0, l1 - l2 - l3 - l4), l_i in non-increasing
/// order. The l_i are obtained as the singular values of
/// tau = V^T (sy x sy) V with rho = V V^dag (V from the spectral
/// decomposition), which equal the square roots of the eigenvalues of
/// rho (sy x sy) rho^* (sy x sy) without squaring round-off near zero.
/// Complex conjugation is taken in the fixed product basis. Clamped to [0, 1].
double concurrence(const ComplexMatrix& rho);
double concurrence(const DensityMatrix& rho);

/// Same quantity from the eigenvalues mu_i of the non-Hermitian product
/// rho (sy x sy) rho^* (sy x sy), l_i = sqrt(max(Re mu_i, 0)). Accuracy is
/// limited to about sqrt(machine epsilon) for rank-deficient states.
double concurrence_product_route(const ComplexMatrix& rho);

/// Equal-time photon correlation rho_rr / (P(r1) P(r2)); nullopt when the
/// product of single-atom excitations is below 1e-12.
std::optional<double> g2(const ComplexMatrix& rho);
std::optional<double> g2(const DensityMatrix& rho);

struct DressedPopulations {
    double plus = 0.0;    // <+|rho|+>, |+-> = (|r1g2> +- |g1r2>)/sqrt2
    double minus = 0.0;
    Complex r_plus{};     // <r1r2|rho|+>
};

DressedPopulations dressed_populations(const ComplexMatrix& rho);
DressedPopulations dressed_populations(const DensityMatrix& rho);

struct ObservableSet {
    std::map<std::string, double> populations;  // gg, r1g2, g1r2, rr, plus, minus
    double concurrence = 0.0;
    std::optional<double> g2;
    double trace_error = 0.0;
    double min_eigenvalue = 0.0;
};

ObservableSet observe(const DensityMatrix& rho);

/// Names understood by make_observers for a state of dimension dim.
/// dim 4: gg r1g2 g1r2 rr plus minus concurrence g2 r_plus_re r_plus_im
/// dim 2: gg rr
std::vector<std::string> known_observables(Eigen::Index dim);
std::vector<Observer> make_observers(const std::vector<std::string>& names, Eigen::Index dim);

struct DressedResiduals {
    double plus = 0.0;   // max |d rho_++/dt - rhs_++|
    double minus = 0.0;  // max |d rho_--/dt - rhs_--|
    double max() const { return plus > minus ? plus : minus; }
};

/// Central-difference residuals of
///   d rho_--/dt = -gamma_- rho_-- + gamma rho_rr
///   d rho_++/dt = -gamma_+ rho_++ + gamma rho_rr - i sqrt2 (Omega^* rho_r+ - Omega rho_+r)
/// with gamma_+- = gamma + Gamma +- Gamma_ex, on interior samples of a
/// uniformly sampled trajectory. Uses the series' plus, minus, rr, r_plus_re,
/// r_plus_im columns, or retained states when those are missing.
DressedResiduals dressed_rate_check(const PairParams& params, const TimeSeries& series);
DressedResiduals dressed_rate_check(const PairParams& params, const ChannelRates& rates,
                                    const TimeSeries& series);

}  // namespace rydgiant
