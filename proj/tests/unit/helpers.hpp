#pragma once

#include "rydgiant/quantum_core.hpp"

#include <random>

namespace testutil {

using rydgiant::Complex;
using rydgiant::ComplexMatrix;
using rydgiant::ComplexVector;

inline ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index dim) {
    std::normal_distribution<double> n(0.0, 1.0);
    ComplexMatrix m(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index i = 0; i < dim; ++i) m(i, j) = Complex(n(rng), n(rng));
    return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, Eigen::Index dim) {
    const ComplexMatrix m = random_matrix(rng, dim);
    return 0.5 * (m + m.adjoint());
}

// Random full-rank density matrix (Ginibre ensemble).
inline ComplexMatrix random_density(std::mt19937_64& rng, Eigen::Index dim) {
    const ComplexMatrix a = random_matrix(rng, dim);
    ComplexMatrix rho = a * a.adjoint();
    return rho / rho.trace().real();
}

inline ComplexVector random_ket(std::mt19937_64& rng, Eigen::Index dim) {
    std::normal_distribution<double> n(0.0, 1.0);
    ComplexVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(n(rng), n(rng));
    return v.normalized();
}

// Haar-random 2x2 unitary from the QR decomposition of a Ginibre matrix.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, Eigen::Index dim) {
    const ComplexMatrix a = random_matrix(rng, dim);
    Eigen::HouseholderQR<ComplexMatrix> qr(a);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < dim; ++k) q.col(k) *= std::polar(1.0, std::arg(r(k, k)));
    return q;
}

inline double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace testutil
