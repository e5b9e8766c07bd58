#include "rydgiant/pair_model.hpp"

#include <cmath>
#include <sstream>

namespace rydgiant {

const std::vector<std::string>& pair_basis() {
    static const std::vector<std::string> basis{"gg", "r1g2", "g1r2", "rr"};
    return basis;
}

ComplexMatrix pair_lowering(int j) {
    switch (j) {
        case 1: return ket_bra(4, kGG, kR1G2);
        case 2: return ket_bra(4, kGG, kG1R2);
        case 3: return ket_bra(4, kR1G2, kRR);
        case 4: return ket_bra(4, kG1R2, kRR);
        default: throw std::out_of_range("pair_lowering: j must be 1..4");
    }
}

ComplexMatrix pair_raising(int j) { return pair_lowering(j).adjoint(); }

void validate(const PairParams& p) {
    std::ostringstream os;
    if (!(p.gamma >= 0.0)) os << "gamma must be >= 0 (got " << p.gamma << "); ";
    if (!(p.Gamma >= 0.0)) os << "Gamma must be >= 0 (got " << p.Gamma << "); ";
    if (!std::isfinite(p.Delta_c)) os << "Delta_c must be finite; ";
    if (!std::isfinite(p.Omega_c.real()) || !std::isfinite(p.Omega_c.imag()))
        os << "Omega_c must be finite; ";
    if (!std::isfinite(p.phi.pi_units())) os << "phi must be finite; ";
    const auto msg = os.str();
    if (!msg.empty()) throw std::invalid_argument("PairParams: " + msg);
}

ExchangeRates exchange_rates(const PairParams& p) {
    ExchangeRates r{p.Gamma * p.phi.sin(), p.Gamma * p.phi.cos()};
    // |cos| <= 1 makes this automatic; it guards against a NaN phase slipping in.
    if (!(std::abs(r.Gamma_ex) <= p.Gamma + 1e-15 * p.Gamma))
        throw std::logic_error("exchange_rates: |Gamma_ex| exceeds Gamma");
    return r;
}

ChannelRates point_channel_rates(const PairParams& p) {
    const auto ex = exchange_rates(p);
    return {p.Gamma, ex.Gamma_ex, ex.J_ex, 0.0};
}

Eigen::Matrix2d dissipation_matrix(const ChannelRates& r) {
    Eigen::Matrix2d m;
    m << r.Gamma, r.Gamma_ex, r.Gamma_ex, r.Gamma;
    return m;
}

ComplexMatrix atomic_hamiltonian(const PairParams& p) {
    return atomic_hamiltonian(p, point_channel_rates(p));
}

ComplexMatrix atomic_hamiltonian(const PairParams& p, const ChannelRates& r) {
    const ComplexMatrix n1 = pair_raising(1) * pair_lowering(1);
    const ComplexMatrix n2 = pair_raising(2) * pair_lowering(2);
    const ComplexMatrix hop = pair_raising(1) * pair_lowering(2) + pair_raising(2) * pair_lowering(1);
    const ComplexMatrix drive = p.Omega_c * (pair_raising(3) + pair_raising(4));
    return (p.Delta_c + r.J_self) * (n1 + n2) + 0.5 * r.J_ex * hop + drive + drive.adjoint();
}

namespace detail {
void require_rhs_input(const DensityMatrix& rho, Eigen::Index dim, const char* who) {
    if (rho.dim() != dim) {
        std::ostringstream os;
        os << who << ": expected dimension " << dim << ", got " << rho.dim();
        throw std::invalid_argument(os.str());
    }
    const double te = trace_error(rho.matrix());
    const double he = hermiticity_error(rho.matrix());
    if (te > 1e-6 || he > 1e-6) {
        std::ostringstream os;
        os << who << ": invalid density matrix (trace error " << te << ", Hermiticity error " << he
           << ")";
        throw std::invalid_argument(os.str());
    }
}
}  // namespace detail

ComplexMatrix pair_rhs(const PairParams& p, const DensityMatrix& rho) {
    validate(p);
    detail::require_rhs_input(rho, 4, "pair_rhs");
    return pair_rhs(p, rho.matrix());
}

ComplexMatrix pair_rhs(const PairParams& p, const ComplexMatrix& rho) {
    return pair_rhs(p, point_channel_rates(p), rho);
}

ComplexMatrix pair_rhs(const PairParams& p, const ChannelRates& r, const ComplexMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument("pair_rhs: expected a 4x4 matrix");
    const ComplexMatrix h = atomic_hamiltonian(p, r);
    ComplexMatrix out = -kI * commutator(h, rho);
    for (int i = 1; i <= 4; ++i) out += p.gamma * lindblad_dissipator(pair_lowering(i), rho);
    for (int j = 1; j <= 2; ++j) out += r.Gamma * lindblad_dissipator(pair_lowering(j), rho);
    // "+ h.c." of the exchange bracket, written as the swapped cross term so the
    // map stays linear for non-Hermitian probes; equal to the adjoint on Hermitian rho.
    out += r.Gamma_ex * (cross_dissipator(pair_lowering(1), pair_lowering(2), rho) +
                         cross_dissipator(pair_lowering(2), pair_lowering(1), rho));
    return out;
}

Lindbladian pair_lindbladian(const PairParams& p) { return pair_lindbladian(p, point_channel_rates(p)); }

Lindbladian pair_lindbladian(const PairParams& p, const ChannelRates& r) {
    validate(p);
    std::vector<DissipatorTerm> terms;
    for (int i = 1; i <= 4; ++i) terms.push_back({p.gamma, pair_lowering(i), pair_lowering(i)});
    for (int j = 1; j <= 2; ++j) terms.push_back({r.Gamma, pair_lowering(j), pair_lowering(j)});
    terms.push_back({r.Gamma_ex, pair_lowering(1), pair_lowering(2)});
    terms.push_back({r.Gamma_ex, pair_lowering(2), pair_lowering(1)});
    return Lindbladian(atomic_hamiltonian(p, r), std::move(terms));
}

std::vector<std::string> regime_warnings(const PairParams& p) {
    std::vector<std::string> w;
    const double omega = std::abs(p.Omega_c);
    if (p.V6 <= 0.0) {
        w.push_back("V6 not set: cannot confirm that the drive only addresses the upper transitions");
    } else if (std::abs(p.Delta_c) > 0.01 * p.V6) {
        std::ostringstream os;
        os << "|Delta_c| = " << std::abs(p.Delta_c) << " is not << V6 = " << p.V6
           << "; the four-level reduction may not hold";
        w.push_back(os.str());
    }
    if (p.V6 > 0.0 && omega > 0.01 * p.V6) {
        std::ostringstream os;
        os << "|Omega_c| = " << omega << " is not << V6 = " << p.V6;
        w.push_back(os.str());
    }
    return w;
}

}  // namespace rydgiant
