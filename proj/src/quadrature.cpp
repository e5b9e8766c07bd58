#include "rydgiant/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace rydgiant {

namespace {

constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.0};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <std::size_t N>
struct Piece {
    double a, b;
    std::array<double, N> value;
    double error;
    bool operator<(const Piece& o) const { return error < o.error; }
};

template <std::size_t N>
Piece<N> rule(const std::function<std::array<double, N>(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    std::array<double, N> k{}, g{};
    const auto fc = f(c);
    for (std::size_t n = 0; n < N; ++n) {
        k[n] = wgk[7] * fc[n];
        g[n] = wg[3] * fc[n];
    }
    for (int j = 0; j < 7; ++j) {
        const auto f1 = f(c - h * xgk[j]);
        const auto f2 = f(c + h * xgk[j]);
        for (std::size_t n = 0; n < N; ++n) {
            k[n] += wgk[j] * (f1[n] + f2[n]);
            if (j % 2 == 1) g[n] += wg[j / 2] * (f1[n] + f2[n]);
        }
    }
    Piece<N> p{a, b, {}, 0.0};
    for (std::size_t n = 0; n < N; ++n) {
        p.value[n] = h * k[n];
        p.error = std::max(p.error, std::abs(h * (k[n] - g[n])));
    }
    return p;
}

}  // namespace

template <std::size_t N>
QuadResult<N> gauss_kronrod(const std::function<std::array<double, N>(double)>& f,
                            std::vector<double> breaks, double abs_tol, std::size_t max_intervals) {
    if (breaks.size() < 2) throw std::invalid_argument("gauss_kronrod: need at least two break points");
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    std::priority_queue<Piece<N>> heap;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) heap.push(rule(f, breaks[i], breaks[i + 1]));

    auto total_error = [&heap] {
        // error sum is recomputed from the heap contents on demand
        auto copy = heap;
        double e = 0.0;
        while (!copy.empty()) {
            e += copy.top().error;
            copy.pop();
        }
        return e;
    };

    double err = total_error();
    while (err > abs_tol && heap.size() < max_intervals) {
        const Piece<N> worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            heap.push(worst);
            break;
        }
        const auto left = rule(f, worst.a, mid);
        const auto right = rule(f, mid, worst.b);
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        if (err <= abs_tol) err = total_error();  // guard against drift in the running sum
    }

    QuadResult<N> out;
    out.intervals = heap.size();
    // deterministic summation: sort pieces by position
    std::vector<Piece<N>> pieces;
    pieces.reserve(heap.size());
    while (!heap.empty()) {
        pieces.push_back(heap.top());
        heap.pop();
    }
    std::sort(pieces.begin(), pieces.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
    for (const auto& p : pieces) {
        for (std::size_t n = 0; n < N; ++n) out.value[n] += p.value[n];
        out.error += p.error;
    }
    out.converged = out.error <= abs_tol;
    return out;
}

template QuadResult<1> gauss_kronrod<1>(const std::function<std::array<double, 1>(double)>&,
                                        std::vector<double>, double, std::size_t);
template QuadResult<4> gauss_kronrod<4>(const std::function<std::array<double, 4>(double)>&,
                                        std::vector<double>, double, std::size_t);

}  // namespace rydgiant
