#include "rydgiant/continuous_coupling.hpp"

#include "rydgiant/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace rydgiant {

CouplingRates continuous_rates(double Gamma, Phase phi, double theta) {
    if (!(theta >= 0.0) || !std::isfinite(theta))
        throw std::invalid_argument("continuous_rates: theta must be finite and >= 0");
    if (theta == 0.0) return {Gamma, Gamma * phi.cos(), Gamma * phi.sin(), 0.0, 0.0};
    if (!(phi.pi_units() > 0.0))
        throw std::invalid_argument("continuous_rates: phi must be > 0 when theta > 0");
    const double p = phi.radians();
    const double t2 = theta * theta;
    const double d = (t2 + 4.0) * (t2 + 4.0);
    CouplingRates r;
    r.theta = theta;
    r.Gamma_eff = 16.0 * Gamma / d;
    r.Gamma_ex_eff = 16.0 * Gamma * phi.cos() / d;
    const double poly = 8.0 * p + 2.0 * t2 * p + 12.0 * theta + t2 * theta;
    r.J_ex_eff = Gamma * (poly * std::exp(-2.0 * p / theta) + 16.0 * phi.sin()) / d;
    r.J_self = Gamma * theta * (t2 + 12.0) / d;
    return r;
}

namespace {

std::vector<double> grid_breaks(double lo, double hi, std::vector<double> extra) {
    constexpr double spacing = 2.0 * std::numbers::pi;
    const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / spacing));
    std::vector<double> b;
    for (std::size_t i = 0; i <= n; ++i)
        b.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n));
    for (double e : extra)
        if (e > lo && e < hi) b.push_back(e);
    return b;
}

}  // namespace

CouplingRates quadrature_rates(double Gamma, Phase phi, double theta, double tol) {
    if (!(theta > 0.0) || !std::isfinite(theta))
        throw std::invalid_argument("quadrature_rates: theta must be finite and > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("quadrature_rates: tol must be > 0");
    const double p = phi.radians();
    const double a = 2.0 / theta;
    const double t2 = theta * theta;
    // Gamma'/Gamma sets the scale the four integrals are resolved against.
    const double scale = 16.0 / ((t2 + 4.0) * (t2 + 4.0));
    const double half_width = std::max(10.0 * theta, 0.5 * theta * std::log(100.0 / (tol * scale)));
    const double lo = std::min(0.0, p) - half_width;
    const double hi = std::max(0.0, p) + half_width;
    const double target = tol * scale * t2;  // on the raw integrals, rate = Gamma/theta^2 * I
    const double outer_tol = 0.5 * target;
    const double inner_tol = 0.1 * outer_tol / (hi - lo);

    const std::function<std::array<double, 4>(double)> outer = [&](double x) {
        const std::function<std::array<double, 4>(double)> inner = [x, p, a](double y) {
            const double e1 = std::exp(-a * std::abs(y));
            const double e2 = std::exp(-a * std::abs(y - p));
            const double c = std::cos(x - y);
            const double s = std::sin(std::abs(x - y));
            return std::array<double, 4>{e1 * c, e1 * s, e2 * c, e2 * s};
        };
        const auto r = gauss_kronrod<4>(inner, grid_breaks(lo, hi, {0.0, p, x}), inner_tol);
        if (!r.converged) {
            std::ostringstream os;
            os << "quadrature_rates: requested tolerance " << tol << " not reached (inner error "
               << r.error * Gamma / t2 << " at x = " << x << ", target " << inner_tol * Gamma / t2 << ")";
            throw NumericalError(os.str());
        }
        const double w = std::exp(-a * std::abs(x));
        return std::array<double, 4>{w * r.value[0], w * r.value[1], w * r.value[2], w * r.value[3]};
    };
    const auto res = gauss_kronrod<4>(outer, grid_breaks(lo, hi, {0.0, p}), outer_tol);
    if (!res.converged) {
        std::ostringstream os;
        os << "quadrature_rates: requested tolerance " << tol << " not reached (error estimate "
           << res.error * Gamma / t2 << ", target " << outer_tol * Gamma / t2 << ")";
        throw NumericalError(os.str());
    }
    const double k = Gamma / t2;
    CouplingRates r;
    r.theta = theta;
    r.Gamma_eff = k * res.value[0];
    r.J_self = k * res.value[1];
    r.Gamma_ex_eff = k * res.value[2];
    r.J_ex_eff = k * res.value[3];
    return r;
}

double max_relative_difference(const CouplingRates& a, const CouplingRates& b) {
    const double floor = std::abs(b.Gamma_eff);
    auto rel = [floor](double x, double y) {
        const double den = std::max(std::abs(y), floor);
        return den == 0.0 ? std::abs(x - y) : std::abs(x - y) / den;
    };
    return std::max({rel(a.Gamma_eff, b.Gamma_eff), rel(a.Gamma_ex_eff, b.Gamma_ex_eff),
                     rel(a.J_ex_eff, b.J_ex_eff), rel(a.J_self, b.J_self)});
}

ChannelRates to_channel_rates(const CouplingRates& r) {
    return {r.Gamma_eff, r.Gamma_ex_eff, r.J_ex_eff, r.J_self};
}

Complex upsilon_continuous(const PairParams& p, const CouplingRates& r) {
    if (p.Delta_c == 0.0)
        throw std::invalid_argument("upsilon_continuous: Delta_c == 0, adiabatic elimination undefined");
    return Complex(r.Gamma_eff + r.Gamma_ex_eff, r.J_self + r.J_ex_eff) * std::norm(p.Omega_c) /
           (p.Delta_c * p.Delta_c);
}

ComplexMatrix continuous_pair_rhs(const PairParams& p, const CouplingRates& r, const DensityMatrix& rho) {
    validate(p);
    detail::require_rhs_input(rho, 4, "continuous_pair_rhs");
    return continuous_pair_rhs(p, r, rho.matrix());
}

ComplexMatrix continuous_pair_rhs(const PairParams& p, const CouplingRates& r, const ComplexMatrix& rho) {
    return pair_rhs(p, to_channel_rates(r), rho);
}

Lindbladian continuous_pair_lindbladian(const PairParams& p, const CouplingRates& r) {
    return pair_lindbladian(p, to_channel_rates(r));
}

}  // namespace rydgiant
