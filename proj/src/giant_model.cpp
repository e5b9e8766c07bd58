#include "rydgiant/giant_model.hpp"

#include <cmath>
#include <sstream>

namespace rydgiant {

const std::vector<std::string>& giant_basis() {
    static const std::vector<std::string> basis{"g", "r"};
    return basis;
}

Complex upsilon(const PairParams& p) {
    if (p.Delta_c == 0.0)
        throw std::invalid_argument("upsilon: Delta_c == 0, adiabatic elimination undefined");
    const auto ex = exchange_rates(p);
    return Complex(p.Gamma + ex.Gamma_ex, ex.J_ex) * std::norm(p.Omega_c) / (p.Delta_c * p.Delta_c);
}

GiantParams giant_params(const PairParams& p) { return {p.gamma, upsilon(p)}; }

void validate(const GiantParams& p) {
    std::ostringstream os;
    if (!(p.gamma >= 0.0)) os << "gamma must be >= 0 (got " << p.gamma << "); ";
    if (!(p.Upsilon.real() >= 0.0)) os << "Re(Upsilon) must be >= 0 (got " << p.Upsilon.real() << "); ";
    if (!std::isfinite(p.Upsilon.imag())) os << "Im(Upsilon) must be finite; ";
    const auto msg = os.str();
    if (!msg.empty()) throw std::invalid_argument("GiantParams: " + msg);
}

ComplexMatrix giant_rhs(const GiantParams& p, const DensityMatrix& rho) {
    validate(p);
    detail::require_rhs_input(rho, 2, "giant_rhs");
    return giant_rhs(p, rho.matrix());
}

ComplexMatrix giant_rhs(const GiantParams& p, const ComplexMatrix& rho) {
    if (rho.rows() != 2 || rho.cols() != 2)
        throw std::invalid_argument("giant_rhs: expected a 2x2 matrix");
    const Complex u = p.Upsilon;
    const double decay = 2.0 * u.real() + 2.0 * p.gamma;
    ComplexMatrix d(2, 2);
    d(0, 0) = decay * rho(1, 1);
    d(1, 1) = -decay * rho(1, 1);
    d(0, 1) = -(std::conj(u) + p.gamma) * rho(0, 1);
    d(1, 0) = -(u + p.gamma) * rho(1, 0);
    return d;
}

Lindbladian giant_lindbladian(const GiantParams& p) {
    validate(p);
    const ComplexMatrix lower = ket_bra(2, 0, 1);
    // H = Im(Upsilon)|r><r| carries the Lamb shift on the coherences.
    ComplexMatrix h = ComplexMatrix::Zero(2, 2);
    h(1, 1) = p.Upsilon.imag();
    return Lindbladian(h, {{2.0 * p.gamma + 2.0 * p.Upsilon.real(), lower, lower}});
}

double giant_population_analytic(const GiantParams& p, double t, double rr0) {
    if (t < 0.0) throw std::invalid_argument("giant_population_analytic: t must be >= 0");
    if (rr0 < 0.0 || rr0 > 1.0)
        throw std::invalid_argument("giant_population_analytic: rr0 must lie in [0, 1]");
    return rr0 * std::exp(-(2.0 * p.Upsilon.real() + 2.0 * p.gamma) * t);
}

}  // namespace rydgiant
