// Element-wise form of the pair master equation. Deliberately shares no code
// with the operator form in pair_model.cpp beyond the parameter struct.
//
// Matrix elements are named rho_{a1 b1, c2 d2} = <a1 c2| rho |b1 d2>, so e.g.
// rho_{r1g1,g2r2} = <r1g2|rho|g1r2>. The rows below are written in the drive
// convention H ⊃ -W(s3+ + s4+) + h.c.; W = -Omega_c maps them onto
// atomic_hamiltonian() (the two conventions differ by the local unitary
// sigma_z (x) sigma_z). Intrinsic decay enters only through the four
// channels sigma_-^i; there is no feeding of ground-state coherences from
// |r1r2> coherences.

#include "rydgiant/pair_model.hpp"

namespace rydgiant {

namespace {

enum class Lv { g, r };

constexpr int index_of(Lv atom1, Lv atom2) {
    return (atom1 == Lv::r ? 1 : 0) + (atom2 == Lv::r ? 2 : 0);
}

}  // namespace

ComplexMatrix expanded_rhs(const PairParams& p, const DensityMatrix& rho) {
    validate(p);
    detail::require_rhs_input(rho, 4, "expanded_rhs");
    return expanded_rhs(p, rho.matrix());
}

ComplexMatrix expanded_rhs(const PairParams& p, const ComplexMatrix& m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw std::invalid_argument("expanded_rhs: expected a 4x4 matrix");
    using enum Lv;
    auto R = [&m](Lv a1, Lv b1, Lv c2, Lv d2) { return m(index_of(a1, c2), index_of(b1, d2)); };
    ComplexMatrix d = ComplexMatrix::Zero(4, 4);
    auto D = [&d](Lv a1, Lv b1, Lv c2, Lv d2) -> Complex& {
        return d(index_of(a1, c2), index_of(b1, d2));
    };

    const double gm = p.gamma;
    const double G = p.Gamma;
    const double Gex = G * p.phi.cos();
    const Complex Gt = G * Complex(p.phi.cos(), p.phi.sin());  // Gamma e^{i phi}
    const Complex Gtc = std::conj(Gt);
    const Complex W = -p.Omega_c;
    const Complex Wc = std::conj(W);
    const double Dl = p.Delta_c;
    const Complex i = kI;

    // populations
    D(g, g, g, g) = (gm + G) * R(r, r, g, g) + (gm + G) * R(g, g, r, r) + Gex * R(r, g, g, r) +
                    Gex * R(g, r, r, g);
    D(r, r, g, g) = -(gm + G) * R(r, r, g, g) + gm * R(r, r, r, r) - Gt / 2.0 * R(g, r, r, g) -
                    Gtc / 2.0 * R(r, g, g, r) - i * (W * R(r, r, g, r) - Wc * R(r, r, r, g));
    D(g, g, r, r) = -(gm + G) * R(g, g, r, r) + gm * R(r, r, r, r) - Gt / 2.0 * R(r, g, g, r) -
                    Gtc / 2.0 * R(g, r, r, g) - i * (W * R(g, r, r, r) - Wc * R(r, g, r, r));

    // ground <-> single-excitation coherences
    D(g, r, g, g) = (i * Dl - gm / 2.0 - G / 2.0) * R(g, r, g, g) - Gtc / 2.0 * R(g, g, g, r) -
                    i * W * R(g, r, g, r);
    D(r, g, g, g) = -(i * Dl + gm / 2.0 + G / 2.0) * R(r, g, g, g) - Gt / 2.0 * R(g, g, r, g) +
                    i * Wc * R(r, g, r, g);
    D(g, g, g, r) = (i * Dl - gm / 2.0 - G / 2.0) * R(g, g, g, r) - Gtc / 2.0 * R(g, r, g, g) -
                    i * W * R(g, r, g, r);
    D(g, g, r, g) = -(i * Dl + gm / 2.0 + G / 2.0) * R(g, g, r, g) - Gt / 2.0 * R(r, g, g, g) +
                    i * Wc * R(r, g, r, g);

    // ground <-> double-excitation coherences
    D(g, r, g, r) = -gm * R(g, r, g, r) - i * Wc * (R(g, r, g, g) + R(g, g, g, r));
    D(r, g, r, g) = -gm * R(r, g, r, g) + i * W * (R(r, g, g, g) + R(g, g, r, g));

    // coherences between the two single-excitation states
    D(r, g, g, r) = -(gm + G) * R(r, g, g, r) - Gt / 2.0 * R(g, g, r, r) -
                    Gtc / 2.0 * R(r, r, g, g) - i * (W * R(r, r, g, r) - Wc * R(r, g, r, r));
    D(g, r, r, g) = -(gm + G) * R(g, r, r, g) - Gtc / 2.0 * R(g, g, r, r) -
                    Gt / 2.0 * R(r, r, g, g) + i * (Wc * R(r, r, r, g) - W * R(g, r, r, r));

    // single <-> double-excitation coherences
    D(r, r, g, r) = -(i * Dl + 3.0 * gm / 2.0 + G / 2.0) * R(r, r, g, r) -
                    Gt / 2.0 * R(g, r, r, r) -
                    i * Wc * (R(r, r, g, g) + R(r, g, g, r) - R(r, r, r, r));
    D(r, r, r, g) = (i * Dl - 3.0 * gm / 2.0 - G / 2.0) * R(r, r, r, g) -
                    Gtc / 2.0 * R(r, g, r, r) +
                    i * W * (R(r, r, g, g) + R(g, r, r, g) - R(r, r, r, r));
    D(g, r, r, r) = -(i * Dl + 3.0 * gm / 2.0 + G / 2.0) * R(g, r, r, r) -
                    Gt / 2.0 * R(r, r, g, r) -
                    i * Wc * (R(g, r, r, g) + R(g, g, r, r) - R(r, r, r, r));
    D(r, g, r, r) = (i * Dl - 3.0 * gm / 2.0 - G / 2.0) * R(r, g, r, r) -
                    Gtc / 2.0 * R(r, r, r, g) +
                    i * W * (R(r, g, g, r) + R(g, g, r, r) - R(r, r, r, r));

    // probability conservation closes the system
    D(r, r, r, r) = -(D(g, g, g, g) + D(r, r, g, g) + D(g, g, r, r));
    return d;
}

}  // namespace rydgiant
