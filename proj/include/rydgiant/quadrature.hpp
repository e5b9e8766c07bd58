#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace rydgiant {

template <std::size_t N>
struct QuadResult {
    std::array<double, N> value{};
    double error = 0.0;  // estimated absolute error, max over components
    std::size_t intervals = 0;
    bool converged = false;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of a vector-valued
/// integrand over [breaks.front(), breaks.back()], with the interior points of
/// `breaks` used as initial subdivision (kinks, peaks). Bisects the interval
/// with the largest error until the summed error is below abs_tol or
/// max_intervals is reached (converged = false in that case).
template <std::size_t N>
QuadResult<N> gauss_kronrod(const std::function<std::array<double, N>(double)>& f,
                            std::vector<double> breaks, double abs_tol,
                            std::size_t max_intervals = 4000);

extern template QuadResult<1> gauss_kronrod<1>(const std::function<std::array<double, 1>(double)>&,
                                               std::vector<double>, double, std::size_t);
extern template QuadResult<4> gauss_kronrod<4>(const std::function<std::array<double, 4>(double)>&,
                                               std::vector<double>, double, std::size_t);

}  // namespace rydgiant
