#include "rydgiant/observables.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

namespace rydgiant {

namespace {

void require_pair(const ComplexMatrix& rho, const char* who) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument(std::string(who) + ": expected a two-atom (4x4) state");
}

const ComplexMatrix& sigma_yy() {
    static const ComplexMatrix m = [] {
        ComplexMatrix y = ComplexMatrix::Zero(4, 4);
        y(kGG, kRR) = -1.0;
        y(kRR, kGG) = -1.0;
        y(kR1G2, kG1R2) = 1.0;
        y(kG1R2, kR1G2) = 1.0;
        return y;
    }();
    return m;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInvSqrt2 = 0.70710678118654752440;

double wootters(std::vector<double> lam) {
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return std::clamp(lam[0] - lam[1] - lam[2] - lam[3], 0.0, 1.0);
}

}  // namespace

double concurrence(const ComplexMatrix& rho) {
    require_pair(rho, "concurrence");
    const ComplexMatrix h = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    if (es.info() != Eigen::Success)
        throw NumericalError("self-adjoint eigen-solver did not converge for concurrence state");
    ComplexMatrix v = es.eigenvectors();
    for (Eigen::Index k = 0; k < 4; ++k) v.col(k) *= std::sqrt(std::max(es.eigenvalues()(k), 0.0));
    const ComplexMatrix tau = v.transpose() * sigma_yy() * v;
    Eigen::JacobiSVD<ComplexMatrix> svd(tau);
    const auto& sv = svd.singularValues();
    return wootters({sv(0), sv(1), sv(2), sv(3)});
}

double concurrence_product_route(const ComplexMatrix& rho) {
    require_pair(rho, "concurrence_product_route");
    const ComplexMatrix& y = sigma_yy();
    const ComplexMatrix tilde = y * rho.conjugate() * y;
    const auto mu = eigenvalues(rho * tilde, "concurrence product rho*rho_tilde");
    std::vector<double> lam;
    for (const auto& m : mu) lam.push_back(std::sqrt(std::max(m.real(), 0.0)));
    return wootters(lam);
}

double concurrence(const DensityMatrix& rho) { return concurrence(rho.matrix()); }

std::optional<double> g2(const ComplexMatrix& rho) {
    require_pair(rho, "g2");
    const double rr = rho(kRR, kRR).real();
    const double p1 = rho(kR1G2, kR1G2).real() + rr;
    const double p2 = rho(kG1R2, kG1R2).real() + rr;
    const double den = p1 * p2;
    if (!(den >= 1e-12)) return std::nullopt;
    return rr / den;
}

std::optional<double> g2(const DensityMatrix& rho) { return g2(rho.matrix()); }

DressedPopulations dressed_populations(const ComplexMatrix& rho) {
    require_pair(rho, "dressed_populations");
    const double s = rho(kR1G2, kR1G2).real() + rho(kG1R2, kG1R2).real();
    const double c = rho(kR1G2, kG1R2).real() + rho(kG1R2, kR1G2).real();
    return {0.5 * (s + c), 0.5 * (s - c), kInvSqrt2 * (rho(kRR, kR1G2) + rho(kRR, kG1R2))};
}

DressedPopulations dressed_populations(const DensityMatrix& rho) {
    return dressed_populations(rho.matrix());
}

ObservableSet observe(const DensityMatrix& rho) {
    require_pair(rho.matrix(), "observe");
    ObservableSet o;
    const auto& m = rho.matrix();
    o.populations["gg"] = m(kGG, kGG).real();
    o.populations["r1g2"] = m(kR1G2, kR1G2).real();
    o.populations["g1r2"] = m(kG1R2, kG1R2).real();
    o.populations["rr"] = m(kRR, kRR).real();
    const auto d = dressed_populations(m);
    o.populations["plus"] = d.plus;
    o.populations["minus"] = d.minus;
    o.concurrence = concurrence(m);
    o.g2 = g2(m);
    o.trace_error = trace_error(m);
    o.min_eigenvalue = min_eigenvalue(m);
    return o;
}

std::vector<std::string> known_observables(Eigen::Index dim) {
    if (dim == 2) return {"gg", "rr"};
    if (dim == 4)
        return {"gg", "r1g2", "g1r2", "rr", "plus", "minus", "concurrence", "g2", "r_plus_re",
                "r_plus_im"};
    return {};
}

std::vector<Observer> make_observers(const std::vector<std::string>& names, Eigen::Index dim) {
    std::vector<Observer> out;
    for (const auto& n : names) {
        std::function<double(const ComplexMatrix&)> f;
        if (dim == 2) {
            if (n == "gg") f = [](const ComplexMatrix& r) { return r(0, 0).real(); };
            if (n == "rr") f = [](const ComplexMatrix& r) { return r(1, 1).real(); };
        } else if (dim == 4) {
            if (n == "gg") f = [](const ComplexMatrix& r) { return r(kGG, kGG).real(); };
            if (n == "r1g2") f = [](const ComplexMatrix& r) { return r(kR1G2, kR1G2).real(); };
            if (n == "g1r2") f = [](const ComplexMatrix& r) { return r(kG1R2, kG1R2).real(); };
            if (n == "rr") f = [](const ComplexMatrix& r) { return r(kRR, kRR).real(); };
            if (n == "plus") f = [](const ComplexMatrix& r) { return dressed_populations(r).plus; };
            if (n == "minus") f = [](const ComplexMatrix& r) { return dressed_populations(r).minus; };
            if (n == "concurrence") f = [](const ComplexMatrix& r) { return concurrence(r); };
            if (n == "g2") f = [](const ComplexMatrix& r) { return g2(r).value_or(kNaN); };
            if (n == "r_plus_re")
                f = [](const ComplexMatrix& r) { return dressed_populations(r).r_plus.real(); };
            if (n == "r_plus_im")
                f = [](const ComplexMatrix& r) { return dressed_populations(r).r_plus.imag(); };
        }
        if (!f) {
            std::ostringstream os;
            os << "unknown observable '" << n << "' for a dimension-" << dim << " model";
            throw std::invalid_argument(os.str());
        }
        out.push_back({n, std::move(f)});
    }
    return out;
}

DressedResiduals dressed_rate_check(const PairParams& params, const TimeSeries& series) {
    return dressed_rate_check(params, point_channel_rates(params), series);
}

DressedResiduals dressed_rate_check(const PairParams& p, const ChannelRates& rates,
                                    const TimeSeries& ts) {
    const std::size_t n = ts.times.size();
    if (n < 3) throw std::invalid_argument("dressed_rate_check: need at least 3 samples");
    const double step = ts.times[1] - ts.times[0];
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs((ts.times[i] - ts.times[i - 1]) - step) > 1e-6 * step)
            throw std::invalid_argument("dressed_rate_check: samples must be uniformly spaced");
    }

    std::vector<double> plus(n), minus(n), rr(n);
    std::vector<Complex> rp(n);
    const std::vector<std::string> needed{"plus", "minus", "rr", "r_plus_re", "r_plus_im"};
    const bool from_columns =
        std::all_of(needed.begin(), needed.end(), [&](const auto& k) { return ts.has(k); });
    if (from_columns) {
        plus = ts.column("plus");
        minus = ts.column("minus");
        rr = ts.column("rr");
        const auto& re = ts.column("r_plus_re");
        const auto& im = ts.column("r_plus_im");
        for (std::size_t i = 0; i < n; ++i) rp[i] = Complex(re[i], im[i]);
    } else if (ts.states.size() == n) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto d = dressed_populations(ts.states[i]);
            plus[i] = d.plus;
            minus[i] = d.minus;
            rp[i] = d.r_plus;
            rr[i] = ts.states[i](kRR, kRR).real();
        }
    } else {
        throw std::invalid_argument(
            "dressed_rate_check: series needs plus/minus/rr/r_plus_re/r_plus_im columns or "
            "retained states");
    }

    const double gp = p.gamma + rates.Gamma + rates.Gamma_ex;
    const double gm = p.gamma + rates.Gamma - rates.Gamma_ex;
    const Complex om = p.Omega_c;
    DressedResiduals r;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double dt2 = ts.times[i + 1] - ts.times[i - 1];
        const double dplus = (plus[i + 1] - plus[i - 1]) / dt2;
        const double dminus = (minus[i + 1] - minus[i - 1]) / dt2;
        const Complex drive = -kI * std::sqrt(2.0) * (std::conj(om) * rp[i] - om * std::conj(rp[i]));
        const double rhs_plus = -gp * plus[i] + p.gamma * rr[i] + drive.real();
        const double rhs_minus = -gm * minus[i] + p.gamma * rr[i];
        r.plus = std::max(r.plus, std::abs(dplus - rhs_plus));
        r.minus = std::max(r.minus, std::abs(dminus - rhs_minus));
    }
    return r;
}

}  // namespace rydgiant
