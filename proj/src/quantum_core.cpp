#include "rydgiant/quantum_core.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rydgiant {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        std::ostringstream os;
        os << what << " must be a non-empty square matrix, got " << m.rows() << "x" << m.cols();
        throw std::invalid_argument(os.str());
    }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    require_square(a, what);
    require_square(b, what);
    if (a.rows() != b.rows()) {
        std::ostringstream os;
        os << what << ": dimension mismatch " << a.rows() << " vs " << b.rows();
        throw std::invalid_argument(os.str());
    }
}

// Relative threshold below which input is routed to the self-adjoint solver.
constexpr double kHermitianRouting = 1e-12;

}  // namespace

ComplexMatrix adjoint(const ComplexMatrix& m) { return m.adjoint(); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "anticommutator");
    return a * b + b * a;
}

ComplexMatrix ket_bra(Eigen::Index dim, Eigen::Index row, Eigen::Index col) {
    if (row < 0 || col < 0 || row >= dim || col >= dim)
        throw std::out_of_range("ket_bra: index outside basis");
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    m(row, col) = 1.0;
    return m;
}

ComplexMatrix lindblad_dissipator(const ComplexMatrix& op, const ComplexMatrix& rho) {
    require_same_dim(op, rho, "lindblad_dissipator");
    const ComplexMatrix od = op.adjoint();
    const ComplexMatrix odo = od * op;
    return op * rho * od - 0.5 * (odo * rho + rho * odo);
}

ComplexMatrix cross_dissipator(const ComplexMatrix& a, const ComplexMatrix& b,
                               const ComplexMatrix& rho) {
    require_same_dim(a, b, "cross_dissipator");
    require_same_dim(a, rho, "cross_dissipator");
    const ComplexMatrix bd = b.adjoint();
    const ComplexMatrix bda = bd * a;
    return a * rho * bd - 0.5 * (bda * rho + rho * bda);
}

std::vector<Complex> eigenvalues(const ComplexMatrix& m, std::string_view context) {
    require_square(m, "eigenvalues");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(m.rows()));
    if (asym <= kHermitianRouting * scale) {
        const ComplexMatrix h = 0.5 * (m + m.adjoint());
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw NumericalError("self-adjoint eigen-solver did not converge for " +
                                 std::string(context));
        for (Eigen::Index i = 0; i < m.rows(); ++i) out.emplace_back(solver.eigenvalues()(i), 0.0);
        return out;
    }
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, false);
    if (solver.info() != Eigen::Success)
        throw NumericalError("QR eigen-solver did not converge for " + std::string(context));
    for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(solver.eigenvalues()(i));
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, std::string_view context) {
    require_square(m, "hermitian_eigenvalues");
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("self-adjoint eigen-solver did not converge for " +
                             std::string(context));
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

double trace_error(const ComplexMatrix& rho) { return std::abs(rho.trace() - Complex(1.0, 0.0)); }

double hermiticity_error(const ComplexMatrix& rho) {
    return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const ComplexMatrix& rho) {
    return hermitian_eigenvalues(rho, "density matrix").front();
}

ValidityReport check_validity(const ComplexMatrix& rho) {
    require_square(rho, "density matrix");
    return {trace_error(rho), hermiticity_error(rho), min_eigenvalue(rho)};
}

// ------------------------------------------------------------ DensityMatrix

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<std::string> labels)
    : matrix_(std::move(matrix)), labels_(std::move(labels)) {
    require_square(matrix_, "DensityMatrix");
    if (static_cast<Eigen::Index>(labels_.size()) != matrix_.rows())
        throw std::invalid_argument("DensityMatrix: need one basis label per dimension");
}

DensityMatrix DensityMatrix::basis_state(Eigen::Index index, std::vector<std::string> labels) {
    const auto dim = static_cast<Eigen::Index>(labels.size());
    return DensityMatrix(ket_bra(dim, index, index), std::move(labels));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi, std::vector<std::string> labels) {
    const double n = psi.norm();
    if (n == 0.0) throw std::invalid_argument("DensityMatrix::pure: zero state vector");
    const ComplexVector u = psi / n;
    return DensityMatrix(u * u.adjoint(), std::move(labels));
}

DensityMatrix partial_trace(const DensityMatrix& rho, int keep) {
    if (rho.dim() != 4)
        throw std::invalid_argument("partial_trace: expected a two-atom (dim 4) state");
    if (keep != 1 && keep != 2) throw std::invalid_argument("partial_trace: keep must be 1 or 2");
    // index = a1 + 2*a2 with g=0, r=1
    const auto& m = rho.matrix();
    ComplexMatrix red = ComplexMatrix::Zero(2, 2);
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int other = 0; other < 2; ++other) {
                const int i = keep == 1 ? a + 2 * other : other + 2 * a;
                const int j = keep == 1 ? b + 2 * other : other + 2 * b;
                red(a, b) += m(i, j);
            }
        }
    }
    return DensityMatrix(std::move(red), {"g", "r"});
}

// -------------------------------------------------------------- Lindbladian

Lindbladian::Lindbladian(ComplexMatrix hamiltonian, std::vector<DissipatorTerm> terms)
    : hamiltonian_(std::move(hamiltonian)) {
    require_square(hamiltonian_, "Lindbladian Hamiltonian");
    const Eigen::Index n = hamiltonian_.rows();
    ComplexMatrix decay = ComplexMatrix::Zero(n, n);
    auto sparse = [](const ComplexMatrix& m) {
        std::vector<Entry> e;
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            for (Eigen::Index i = 0; i < m.rows(); ++i)
                if (m(i, j) != Complex(0.0, 0.0)) e.push_back({i, j, m(i, j)});
        return e;
    };
    for (const auto& t : terms) {
        require_same_dim(t.a, hamiltonian_, "Lindbladian jump operator");
        require_same_dim(t.b, hamiltonian_, "Lindbladian jump operator");
        if (t.rate == 0.0) continue;
        decay += t.rate * (t.b.adjoint() * t.a);
        jumps_.push_back({t.rate, sparse(t.a), sparse(t.b)});
    }
    left_ = -kI * hamiltonian_ - 0.5 * decay;
    right_ = kI * hamiltonian_ - 0.5 * decay;
}

void Lindbladian::apply(const ComplexMatrix& rho, ComplexMatrix& out) const {
    const Eigen::Index n = dim();
    if (rho.rows() != n || rho.cols() != n)
        throw std::invalid_argument("Lindbladian::apply: dimension mismatch");
    out.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            Complex acc(0.0, 0.0);
            for (Eigen::Index k = 0; k < n; ++k)
                acc += left_(i, k) * rho(k, j) + rho(i, k) * right_(k, j);
            out(i, j) = acc;
        }
    }
    for (const auto& jump : jumps_) {
        for (const auto& ea : jump.a) {
            for (const auto& eb : jump.b) {
                out(ea.row, eb.row) +=
                    jump.rate * ea.value * std::conj(eb.value) * rho(ea.col, eb.col);
            }
        }
    }
}

ComplexMatrix Lindbladian::operator()(const ComplexMatrix& rho) const {
    ComplexMatrix out;
    apply(rho, out);
    return out;
}

}  // namespace rydgiant
