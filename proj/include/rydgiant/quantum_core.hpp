#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rydgiant {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Raised when a numerical routine cannot produce a trustworthy result
/// (eigen-solver failure, integrator breakdown, physicality breach).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- algebra

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// |row><col| in dimension dim.
ComplexMatrix ket_bra(Eigen::Index dim, Eigen::Index row, Eigen::Index col);

/// L[O]rho = O rho O^dag - 1/2 {O^dag O, rho}.
ComplexMatrix lindblad_dissipator(const ComplexMatrix& op, const ComplexMatrix& rho);

/// A rho B^dag - 1/2 {B^dag A, rho}. This is one half of a collective
/// exchange channel; callers add the Hermitian conjugate themselves.
ComplexMatrix cross_dissipator(const ComplexMatrix& a, const ComplexMatrix& b,
                               const ComplexMatrix& rho);

/// All eigenvalues with algebraic multiplicity. Hermitian input (within 1e-12)
/// goes through a self-adjoint solver and returns exactly real values in
/// ascending order; anything else uses the complex Schur (QR) iteration.
/// Throws NumericalError mentioning `context` if the iteration fails.
std::vector<Complex> eigenvalues(const ComplexMatrix& m, std::string_view context = "matrix");

/// Ascending eigenvalues of the Hermitian part (M + M^dag)/2.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          std::string_view context = "matrix");

// ---------------------------------------------------------- state checks

double trace_error(const ComplexMatrix& rho);        // |Tr rho - 1|
double hermiticity_error(const ComplexMatrix& rho);  // max_ij |rho_ij - conj(rho_ji)|
double min_eigenvalue(const ComplexMatrix& rho);     // of the Hermitian part

struct ValidityTolerances {
    double trace = 1e-9;
    double hermiticity = 1e-12;
    double eigenvalue = 1e-9;  // smallest eigenvalue must be >= -eigenvalue
};

struct ValidityReport {
    double trace_error = 0.0;
    double hermiticity_error = 0.0;
    double min_eigenvalue = 0.0;

    bool ok(const ValidityTolerances& tol = {}) const {
        return trace_error <= tol.trace && hermiticity_error <= tol.hermiticity &&
               min_eigenvalue >= -tol.eigenvalue;
    }
};

ValidityReport check_validity(const ComplexMatrix& rho);

/// A density operator over a named, ordered basis. Construction only checks
/// shape; physicality is measured through check() so that drift can be
/// monitored instead of aborting.
class DensityMatrix {
public:
    DensityMatrix(ComplexMatrix matrix, std::vector<std::string> labels);

    static DensityMatrix basis_state(Eigen::Index index, std::vector<std::string> labels);
    /// |psi><psi| for a normalized ket (normalization is applied).
    static DensityMatrix pure(const ComplexVector& psi, std::vector<std::string> labels);

    const ComplexMatrix& matrix() const { return matrix_; }
    const std::vector<std::string>& labels() const { return labels_; }
    Eigen::Index dim() const { return matrix_.rows(); }
    Complex operator()(Eigen::Index row, Eigen::Index col) const { return matrix_(row, col); }

    ValidityReport check() const { return check_validity(matrix_); }
    bool is_valid(const ValidityTolerances& tol = {}) const { return check().ok(tol); }

private:
    ComplexMatrix matrix_;
    std::vector<std::string> labels_;
};

/// Reduced state of atom `keep` (1 or 2) of a two-atom state in the ordering
/// {|g1g2>, |r1g2>, |g1r2>, |r1r2>}. Result basis is {g, r}.
DensityMatrix partial_trace(const DensityMatrix& rho, int keep);

// ------------------------------------------------------------ generator

/// One dissipative channel rate * (A rho B^dag - 1/2 {B^dag A, rho}).
/// A == B gives an ordinary Lindblad term.
struct DissipatorTerm {
    double rate = 0.0;
    ComplexMatrix a;
    ComplexMatrix b;
};

/// Precompiled Lindblad generator rho -> -i[H, rho] + sum_k D_k(rho).
///
/// The anticommutator parts are folded into a non-Hermitian effective
/// Hamiltonian and the jump parts are stored as sparse entry lists, so
/// apply() allocates nothing and costs O(dim^3) flops. It is linear in rho
/// and accepts arbitrary (also non-physical) input matrices.
class Lindbladian {
public:
    Lindbladian(ComplexMatrix hamiltonian, std::vector<DissipatorTerm> terms);

    Eigen::Index dim() const { return left_.rows(); }
    const ComplexMatrix& hamiltonian() const { return hamiltonian_; }

    void apply(const ComplexMatrix& rho, ComplexMatrix& out) const;
    ComplexMatrix operator()(const ComplexMatrix& rho) const;

private:
    struct Entry {
        Eigen::Index row;
        Eigen::Index col;
        Complex value;
    };
    struct Jump {
        double rate;
        std::vector<Entry> a;
        std::vector<Entry> b;
    };

    ComplexMatrix hamiltonian_;
    ComplexMatrix left_;   // -iH - 1/2 sum rate B^dag A
    ComplexMatrix right_;  //  iH - 1/2 sum rate B^dag A
    std::vector<Jump> jumps_;
};

}  // namespace rydgiant
