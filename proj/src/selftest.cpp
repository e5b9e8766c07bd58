#include "rydgiant/selftest.hpp"

#include "rydgiant/continuous_coupling.hpp"
#include "rydgiant/giant_model.hpp"
#include "rydgiant/integrator.hpp"
#include "rydgiant/observables.hpp"
#include "rydgiant/pair_model.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

namespace rydgiant {

namespace {

ComplexMatrix random_state(std::mt19937_64& rng, Eigen::Index dim) {
    std::normal_distribution<double> n(0.0, 1.0);
    ComplexMatrix a(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index i = 0; i < dim; ++i) a(i, j) = Complex(n(rng), n(rng));
    ComplexMatrix rho = a * a.adjoint();
    return rho / rho.trace().real();
}

std::string fmt(const char* label, double v) {
    std::ostringstream os;
    os << label << " = " << v;
    return os.str();
}

SelftestCheck check(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    try {
        auto [ok, detail] = body();
        return {name, ok, detail};
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
    std::vector<SelftestCheck> out;

    out.push_back(check("operator vs element-wise pair equation", [] {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double worst = 0.0;
        for (int k = 0; k < 200; ++k) {
            PairParams p{0.1 * u(rng), u(rng), Complex(u(rng), u(rng) - 0.5), 60.0 * (u(rng) - 0.5),
                         Phase::from_pi_units(50.0 * u(rng)), 2e4};
            const ComplexMatrix rho = random_state(rng, 4);
            worst = std::max(worst, (pair_rhs(p, rho) - expanded_rhs(p, rho)).cwiseAbs().maxCoeff());
        }
        return std::pair{worst < 1e-12, fmt("max difference", worst)};
    }));

    out.push_back(check("concurrence of pure states equals 2|ad - bc|", [] {
        std::mt19937_64 rng(12);
        std::normal_distribution<double> n(0.0, 1.0);
        double worst = 0.0;
        for (int k = 0; k < 200; ++k) {
            ComplexVector psi(4);
            for (int i = 0; i < 4; ++i) psi(i) = Complex(n(rng), n(rng));
            psi.normalize();
            const double expect = 2.0 * std::abs(psi(0) * psi(3) - psi(1) * psi(2));
            worst = std::max(worst, std::abs(concurrence(DensityMatrix::pure(psi, pair_basis())) - expect));
        }
        return std::pair{worst < 1e-9, fmt("max difference", worst)};
    }));

    out.push_back(check("giant atom: integration vs closed form", [] {
        PairParams pp{0.001, 1.0, 1.0, 30.0, Phase::from_pi_units(40.0), 2e4};
        const auto gp = giant_params(pp);
        IntegratorConfig cfg;
        cfg.t_end = 300.0;
        cfg.sample_count = 31;
        const auto ts = integrate(giant_lindbladian(gp), DensityMatrix::basis_state(1, giant_basis()), cfg,
                                  make_observers({"rr"}, 2));
        double worst = 0.0;
        for (std::size_t i = 0; i < ts.size(); ++i)
            worst = std::max(worst, std::abs(ts.column("rr")[i] - giant_population_analytic(gp, ts.times[i], 1.0)));
        return std::pair{worst < 1e-9, fmt("max deviation", worst)};
    }));

    out.push_back(check("continuous-coupling closed forms vs quadrature", [] {
        const auto q = quadrature_rates(1.0, Phase::from_pi_units(2.0), 1.0);
        const auto c = continuous_rates(1.0, Phase::from_pi_units(2.0), 1.0);
        const double rel = max_relative_difference(q, c);
        return std::pair{rel < 1e-6, fmt("relative difference", rel)};
    }));

    out.push_back(check("RK4 convergence order on the pair model", [] {
        PairParams p{0.001, 1.0, 1.0, 30.0, Phase::from_pi_units(40.5), 2e4};
        const auto l = pair_lindbladian(p);
        const auto o = convergence_order([&l](const ComplexMatrix& r, ComplexMatrix& d) { l.apply(r, d); },
                                         DensityMatrix::basis_state(kRR, pair_basis()), 1.0, 0.02);
        return std::pair{!o.saturated && o.order >= 3.7, fmt("order", o.order)};
    }));

    out.push_back(check("trace and positivity along a pair trajectory", [] {
        PairParams p{0.001, 1.0, 1.0, 30.0, Phase::from_pi_units(40.0), 2e4};
        IntegratorConfig cfg;
        cfg.t_end = 50.0;
        cfg.sample_count = 51;
        const auto ts = integrate(pair_lindbladian(p), DensityMatrix::basis_state(kRR, pair_basis()), cfg, {});
        const bool ok = ts.max_trace_error() < 1e-9 && ts.max_hermiticity_error() < 1e-10 &&
                        ts.min_eigenvalue() > -1e-8;
        std::ostringstream os;
        os << "trace error " << ts.max_trace_error() << ", Hermiticity " << ts.max_hermiticity_error()
           << ", min eigenvalue " << ts.min_eigenvalue();
        return std::pair{ok, os.str()};
    }));
    return out;
}

}  // namespace rydgiant
