// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria (0 when all pass).

#include "rydgiant/continuous_coupling.hpp"
#include "rydgiant/giant_model.hpp"
#include "rydgiant/integrator.hpp"
#include "rydgiant/observables.hpp"
#include "rydgiant/pair_model.hpp"
#include "rydgiant/scenario.hpp"

#include <Eigen/QR>

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

using namespace rydgiant;

namespace {

constexpr double kPi = std::numbers::pi;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Physicality statistics over every trajectory the suite integrates.
struct Hygiene {
    double trace = 0.0;
    double herm = 0.0;
    double min_eig = 1.0;
    int runs = 0;

    void add(const TimeSeries& ts) {
        trace = std::max(trace, ts.max_trace_error());
        herm = std::max(herm, ts.max_hermiticity_error());
        min_eig = std::min(min_eig, ts.min_eigenvalue());
        ++runs;
    }
} hygiene;

PairParams params(double phi_pi, double delta = 30.0, double gamma = 0.001) {
    PairParams p;
    p.gamma = gamma;
    p.Gamma = 1.0;
    p.Omega_c = 1.0;
    p.Delta_c = delta;
    p.phi = Phase::from_pi_units(phi_pi);
    return p;
}

TimeSeries run(const Lindbladian& l, double t_end, std::size_t samples, const std::vector<std::string>& names) {
    IntegratorConfig cfg;
    cfg.t_end = t_end;
    cfg.sample_count = samples;
    auto ts = integrate(l, DensityMatrix::basis_state(kRR, pair_basis()), cfg, make_observers(names, 4));
    hygiene.add(ts);
    return ts;
}

TimeSeries run_pair(const PairParams& p, double t_end, std::size_t samples, const std::vector<std::string>& names) {
    return run(pair_lindbladian(p), t_end, samples, names);
}

double max_of(const std::vector<double>& v) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : v) m = std::max(m, x);
    return m;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::string opt_time(const std::optional<double>& t) { return t ? fmt("%.6g us", *t) : std::string("none"); }

// ---------------------------------------------------------------- criteria

Outcome decoherence_free_point() {
    const auto t0 = Clock::now();
    const auto ts = run_pair(params(41.0, 30.0, 0.0), 300.0, 3001, {"rr"});
    const double wall = seconds_since(t0);
    double lo = 1.0, t_lo = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (ts.column("rr")[i] < lo) lo = ts.column("rr")[i], t_lo = ts.times[i];
    return {lo >= 1.0 - 1e-6 && wall < 5.0,
            fmt("min rho_rr = %.9f at t = %.4g us (need >= 1 - 1e-6), runtime %.2f s (need < 5 s)", lo, t_lo, wall)};
}

Outcome phase_ordered_decay() {
    IntegratorConfig cfg;
    double r[3];
    const double phis[3] = {40.0, 40.5, 41.0};
    for (int k = 0; k < 3; ++k) {
        const auto ts = run_pair(params(phis[k]), 150.0, 151, {"rr"});
        r[k] = ts.column("rr").back();
    }
    const double re_ups = 2.0 * 1.0 * 1.0 / (30.0 * 30.0);
    const double giant = std::exp(-(2.0 * re_ups + 2.0 * 0.001) * 150.0);
    const bool ordered = r[0] < r[1] && r[1] < r[2];
    const bool close = r[0] < 1.2 * giant;
    return {ordered && close, fmt("rho_rr(150 us): 40pi %.6f < 40.5pi %.6f < 41pi %.6f; 40pi vs 1.2 x giant %.6f",
                                  r[0], r[1], r[2], 1.2 * giant)};
}

Outcome adiabatic_elimination() {
    const double deltas[4] = {10.0, 20.0, 30.0, 60.0};
    double dev[4];
    for (int k = 0; k < 4; ++k) {
        const auto p = params(40.5, deltas[k]);
        const auto ts = run_pair(p, 300.0, 3001, {"rr"});
        const auto g = giant_params(p);
        dev[k] = 0.0;
        for (std::size_t i = 0; i < ts.size(); ++i)
            dev[k] = std::max(dev[k], std::abs(ts.column("rr")[i] - giant_population_analytic(g, ts.times[i], 1.0)));
    }
    const bool dec = dev[0] > dev[1] && dev[1] > dev[2] && dev[2] > dev[3];
    return {dec && dev[2] < 0.05, fmt("max deviation for Delta_c = 10, 20, 30, 60: %.4g, %.4g, %.4g, %.4g "
                                      "(strictly decreasing, Delta_c = 30 below 0.05)",
                                      dev[0], dev[1], dev[2], dev[3])};
}

Outcome quadrature_phase_equivalence() {
    const auto a = run_pair(params(40.5), 300.0, 3001, {"rr"});
    const auto b = run_pair(params(39.5), 300.0, 3001, {"rr"});
    const double d = max_diff(a.column("rr"), b.column("rr"));
    return {d < 1e-8, fmt("max |rho_rr(40.5pi) - rho_rr(39.5pi)| = %.4g (need < 1e-8)", d)};
}

const std::vector<std::string> fig3_obs{"concurrence", "g2", "plus", "minus", "gg", "rr"};

struct Fig3 {
    TimeSeries s40, s405, s41;
};

const Fig3& fig3() {
    static const Fig3 f{run_pair(params(40.0), 2000.0, 2001, fig3_obs), run_pair(params(40.5), 2000.0, 2001, fig3_obs),
                        run_pair(params(41.0), 2000.0, 2001, fig3_obs)};
    return f;
}

Outcome entanglement_onset() {
    const auto& f = fig3();
    const auto onset = detect_onset(f.s40, "concurrence", 0.05);
    const double c405 = max_of(f.s405.column("concurrence"));
    const double c41 = max_of(f.s41.column("concurrence"));
    return {onset.has_value() && c405 < 1e-3 && c41 < 1e-3,
            fmt("40pi: C > 0.05 onset %s (max C %.4g); max C at 40.5pi %.4g, at 41pi %.4g (need < 1e-3)",
                opt_time(onset).c_str(), max_of(f.s40.column("concurrence")), c405, c41)};
}

Outcome bunching_correspondence() {
    const auto& s = fig3().s40;
    const auto onset = detect_onset(s, "concurrence", 1e-3);
    const auto cross = detect_downward_crossing(s, "g2", 1.0);
    const double dt = s.times[1] - s.times[0];
    const bool ok = onset && cross && std::abs(*onset - *cross) <= 2.0 * dt;
    return {ok, fmt("C onset (1e-3) %s, g2 downward crossing of 1 %s, allowed gap %.3g us", opt_time(onset).c_str(),
                    opt_time(cross).c_str(), 2.0 * dt)};
}

Outcome dark_bright_asymmetry() {
    const auto& f = fig3();
    const double p40 = max_of(f.s40.column("plus")), m40 = max_of(f.s40.column("minus"));
    const double p41 = max_of(f.s41.column("plus")), m41 = max_of(f.s41.column("minus"));
    return {p40 < 1e-2 && m40 > 0.1 && m41 < 1e-2 && p41 > 0.1,
            fmt("40pi: max rho_++ %.4g, max rho_-- %.4g; 41pi: max rho_++ %.4g, max rho_-- %.4g", p40, m40, p41, m41)};
}

Outcome dressed_consistency() {
    std::string detail;
    bool ok = true;
    for (double phi : {40.0, 41.0}) {
        const auto p = params(phi);
        const auto ts = run_pair(p, 2000.0, 2'000'001, {"plus", "minus", "rr", "r_plus_re", "r_plus_im"});
        const auto r = dressed_rate_check(p, ts);
        ok = ok && r.max() < 1e-4;
        detail += fmt("%s%gpi: residual plus %.3g, minus %.3g", detail.empty() ? "" : "; ", phi, r.plus, r.minus);
    }
    return {ok, detail + " (need < 1e-4, sampling 1e-3 us)"};
}

Outcome continuous_rates_check() {
    double worst = 0.0, worst_limit = 0.0;
    for (double th : {0.5, 1.0, kPi, 2.5 * kPi})
        for (double phi : {2.0, 10.5, 40.0, 41.0}) {
            const auto ph = Phase::from_pi_units(phi);
            worst = std::max(worst, max_relative_difference(quadrature_rates(1.0, ph, th), continuous_rates(1.0, ph, th)));
        }
    for (double phi : {2.0, 10.5, 40.0, 41.0}) {
        const auto ph = Phase::from_pi_units(phi);
        worst_limit =
            std::max(worst_limit, max_relative_difference(continuous_rates(1.0, ph, 1e-3), continuous_rates(1.0, ph, 0.0)));
    }
    return {worst < 1e-6 && worst_limit < 1e-2,
            fmt("closed form vs quadrature %.3g (need < 1e-6); theta = 1e-3 vs point rates %.3g (need < 1e-2)", worst,
                worst_limit)};
}

Outcome continuous_robustness() {
    const double th = 2.5 * kPi;
    const auto p41 = params(41.0);
    const auto wide = run(continuous_pair_lindbladian(p41, continuous_rates(1.0, p41.phi, th)), 2000.0, 2001, {"rr"});
    const auto point = run(continuous_pair_lindbladian(p41, continuous_rates(1.0, p41.phi, 0.0)), 2000.0, 2001, {"rr"});
    const double d = max_diff(wide.column("rr"), point.column("rr"));
    const Complex u = upsilon_continuous(p41, continuous_rates(1.0, p41.phi, th));
    const auto p40 = params(40.0);
    const auto c40 = run(continuous_pair_lindbladian(p40, continuous_rates(1.0, p40.phi, th)), 2000.0, 2001,
                         {"concurrence"});
    const auto onset = detect_onset(c40, "concurrence", 0.05);
    return {d < 1e-6 && u.real() == 0.0 && u.imag() != 0.0 && onset.has_value(),
            fmt("41pi: max |rho_rr(theta) - rho_rr(0)| = %.4g (need < 1e-6); Upsilon' = %.3g + %.3gi; 40pi C > 0.05 "
                "onset %s (max C %.4g)",
                d, u.real(), u.imag(), opt_time(onset).c_str(), max_of(c40.column("concurrence")))};
}

Outcome numerics_hygiene() {
    const auto l = pair_lindbladian(params(40.0));
    const RhsFunction f = [&l](const ComplexMatrix& r, ComplexMatrix& o) { l.apply(r, o); };
    const auto order = convergence_order(f, DensityMatrix::basis_state(kRR, pair_basis()), 2.0, 0.02);

    std::mt19937_64 rng(2024);
    std::normal_distribution<double> n(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double dual = 0.0;
    for (int k = 0; k < 1000; ++k) {
        PairParams p;
        p.gamma = 0.1 * u(rng);
        p.Gamma = 2.0 * u(rng);
        p.Omega_c = Complex(2.0 * n(rng), 2.0 * n(rng));
        p.Delta_c = 80.0 * u(rng) - 40.0;
        p.phi = Phase::from_radians(50.0 * kPi * u(rng));
        ComplexMatrix a(4, 4);
        for (auto& x : a.reshaped()) x = Complex(n(rng), n(rng));
        ComplexMatrix rho = a * a.adjoint();
        rho /= rho.trace().real();
        dual = std::max(dual, (pair_rhs(p, rho) - expanded_rhs(p, rho)).cwiseAbs().maxCoeff());
    }
    const bool ok = hygiene.trace < 1e-9 && hygiene.herm < 1e-10 && hygiene.min_eig > -1e-8 && order.order >= 3.7 &&
                    dual < 1e-12;
    return {ok, fmt("%d runs: max |tr-1| %.3g, Hermiticity %.3g, min eigenvalue %.3g; RK4 order %.3f; dual RHS %.3g",
                    hygiene.runs, hygiene.trace, hygiene.herm, hygiene.min_eig, order.order, dual)};
}

Outcome observable_oracles() {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> n(0.0, 1.0);
    auto ket = [&] {
        ComplexVector v(4);
        for (auto& x : v) x = Complex(n(rng), n(rng));
        return ComplexVector(v.normalized());
    };
    double pure = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const ComplexVector v = ket();
        const double c = 2.0 * std::abs(v(kGG) * v(kRR) - v(kR1G2) * v(kG1R2));
        pure = std::max(pure, std::abs(concurrence(ComplexMatrix(v * v.adjoint())) - c));
    }
    auto unitary = [&] {
        ComplexMatrix a(2, 2);
        for (auto& x : a.reshaped()) x = Complex(n(rng), n(rng));
        return ComplexMatrix(Eigen::HouseholderQR<ComplexMatrix>(a).householderQ());
    };
    double local = 0.0;
    for (int k = 0; k < 100; ++k) {
        const ComplexVector v = ket();
        const ComplexMatrix rho = v * v.adjoint();
        const ComplexMatrix u1 = unitary(), u2 = unitary();
        ComplexMatrix u(4, 4);
        for (int a1 = 0; a1 < 2; ++a1)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b1 = 0; b1 < 2; ++b1)
                    for (int b2 = 0; b2 < 2; ++b2) u(a1 + 2 * a2, b1 + 2 * b2) = u1(a1, b1) * u2(a2, b2);
        local = std::max(local, std::abs(concurrence(ComplexMatrix(u * rho * u.adjoint())) - concurrence(rho)));
    }
    double giant = 0.0;
    for (double phi : {40.0, 40.5, 41.0}) {
        const auto g = giant_params(params(phi));
        IntegratorConfig cfg;
        cfg.t_end = 2000.0;
        cfg.sample_count = 2001;
        const auto ts = integrate(giant_lindbladian(g), DensityMatrix::basis_state(1, giant_basis()), cfg,
                                  make_observers({"rr"}, 2));
        for (std::size_t i = 0; i < ts.size(); ++i)
            giant = std::max(giant, std::abs(ts.column("rr")[i] - giant_population_analytic(g, ts.times[i], 1.0)));
    }
    return {pure < 1e-9 && local < 1e-9 && giant < 1e-9,
            fmt("pure-state oracle %.3g, local-unitary invariance %.3g, giant numeric vs closed form %.3g (each < 1e-9)",
                pure, local, giant)};
}

}  // namespace

int main() {
    const auto start = Clock::now();
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"decoherence-free point", decoherence_free_point},
        {"phase-ordered decay", phase_ordered_decay},
        {"adiabatic elimination", adiabatic_elimination},
        {"quadrature-phase equivalence", quadrature_phase_equivalence},
        {"entanglement sudden onset", entanglement_onset},
        {"bunching to anti-bunching correspondence", bunching_correspondence},
        {"dark/bright asymmetry", dark_bright_asymmetry},
        {"dressed-state rate equations", dressed_consistency},
        {"continuous-coupling rates", continuous_rates_check},
        {"continuous-coupling robustness", continuous_robustness},
        {"numerics hygiene", numerics_hygiene},
        {"observable oracles", observable_oracles},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s %2zu  %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                    seconds_since(t0));
        std::fflush(stdout);
    }
    const double total = seconds_since(start);
    std::printf("%d of %zu criteria failed; total %.1f s (target < 300 s)\n", failed, criteria.size(), total);
    return failed;
}
