#include "rydgiant/scenario.hpp"

#include "rydgiant/geometry.hpp"
#include "rydgiant/giant_model.hpp"
#include "rydgiant/observables.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

namespace rydgiant {

bool ScenarioResult::all_ok() const {
    for (const auto& p : points)
        if (!p.ok) return false;
    return true;
}

DensityMatrix initial_state(const ScenarioConfig& c) {
    if (c.model == ModelKind::giant) {
        if (c.initial_state == "ground") return DensityMatrix::basis_state(0, giant_basis());
        if (c.initial_state == "double_excited") return DensityMatrix::basis_state(1, giant_basis());
        if (c.initial_state == "custom" && c.custom_initial) return DensityMatrix(*c.custom_initial, giant_basis());
        throw ConfigError({"initial_state '" + c.initial_state + "' is not available for the giant model"});
    }
    if (c.initial_state == "ground") return DensityMatrix::basis_state(kGG, pair_basis());
    if (c.initial_state == "double_excited") return DensityMatrix::basis_state(kRR, pair_basis());
    if (c.initial_state == "plus" || c.initial_state == "minus") {
        ComplexVector psi = ComplexVector::Zero(4);
        psi(kR1G2) = 1.0;
        psi(kG1R2) = c.initial_state == "plus" ? 1.0 : -1.0;
        return DensityMatrix::pure(psi, pair_basis());
    }
    if (c.initial_state == "custom" && c.custom_initial) return DensityMatrix(*c.custom_initial, pair_basis());
    throw ConfigError({"unknown initial_state '" + c.initial_state + "'"});
}

TrajectoryResult run_point(const ScenarioConfig& c) {
    if (c.sweep) throw std::invalid_argument("run_point: configuration still carries a sweep");
    validate(c);
    const auto start = std::chrono::steady_clock::now();
    TrajectoryResult r;
    r.derived.exchange = exchange_rates(c.params);
    if (c.params.Delta_c != 0.0) r.derived.upsilon = upsilon(c.params);
    r.warnings = regime_warnings(c.params);

    const DensityMatrix rho0 = initial_state(c);
    const auto names = c.observables.empty() ? default_observables(c.model) : c.observables;
    const auto observers = make_observers(names, rho0.dim());
    switch (c.model) {
        case ModelKind::pair:
            r.series = integrate(pair_lindbladian(c.params), rho0, c.integrator, observers);
            break;
        case ModelKind::giant:
            r.series = integrate(giant_lindbladian(giant_params(c.params)), rho0, c.integrator, observers);
            break;
        case ModelKind::pair_continuous: {
            const auto rates = continuous_rates(c.params.Gamma, c.params.phi, c.theta);
            r.derived.continuous = rates;
            if (c.params.Delta_c != 0.0) r.derived.upsilon_continuous = upsilon_continuous(c.params, rates);
            r.series = integrate(continuous_pair_lindbladian(c.params, rates), rho0, c.integrator, observers);
            break;
        }
    }
    if (r.series.degraded)
        r.warnings.push_back("trace drift above 1e-7: trajectory flagged as degraded");
    r.ok = true;
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::size_t default_workers() {
    if (const char* env = std::getenv("RYDGIANT_WORKERS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

ScenarioResult run_scenario(const ScenarioConfig& config, std::size_t workers) {
    validate(config);
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = config.point_count();
    if (workers == 0) workers = default_workers();
    workers = std::min(workers, n);

    ScenarioResult out;
    out.points.resize(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            TrajectoryResult& slot = out.points[i];
            const auto t0 = std::chrono::steady_clock::now();
            try {
                slot = run_point(at_sweep_point(config, i));
            } catch (const std::exception& e) {
                slot = TrajectoryResult{};
                slot.ok = false;
                slot.error = e.what();
                slot.wall_seconds =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            }
            slot.index = i;
            if (config.sweep) slot.sweep_value = config.sweep->values[i];
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    out.manifest.config = config;
    out.manifest.version = RYDGIANT_VERSION;
    out.manifest.workers = workers;
    out.manifest.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::optional<double> detect_onset(const TimeSeries& ts, const std::string& name, double threshold) {
    const auto& v = ts.column(name);
    std::optional<std::size_t> prev;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (std::isnan(v[i])) continue;
        if (v[i] > threshold) {
            if (!prev) return ts.times[i];
            const double t0 = ts.times[*prev], v0 = v[*prev];
            return t0 + (threshold - v0) / (v[i] - v0) * (ts.times[i] - t0);
        }
        prev = i;
    }
    return std::nullopt;
}

std::optional<double> detect_downward_crossing(const TimeSeries& ts, const std::string& name, double level) {
    const auto& v = ts.column(name);
    std::optional<std::size_t> prev;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (std::isnan(v[i])) continue;
        if (prev && v[*prev] > level && v[i] < level) {
            const double t0 = ts.times[*prev], v0 = v[*prev];
            return t0 + (v0 - level) / (v0 - v[i]) * (ts.times[i] - t0);
        }
        prev = i;
    }
    return std::nullopt;
}

// ------------------------------------------------------------------ presets

namespace {

ScenarioConfig base(const std::string& name, double t_end, std::size_t samples) {
    ScenarioConfig c;
    c.name = name;
    c.params.gamma = 0.001;
    c.params.Gamma = 1.0;
    c.params.Omega_c = 1.0;
    c.params.Delta_c = 30.0;
    c.params.phi = Phase::from_pi_units(40.5);
    c.params.V6 = per_us(vdw_shift(2.0 * std::numbers::pi * 2.8e12, 3.1));
    c.initial_state = "double_excited";
    c.integrator.t_end = t_end;
    c.integrator.sample_count = samples;
    c.output_dir = "out";
    return c;
}

std::vector<Preset> build_catalog() {
    std::vector<Preset> cat;
    const SweepSpec phases{"phi", {40.0, 40.5, 41.0}};
    {
        Preset p{"fig2a", "pair vs giant-atom double-excitation population at phi = 40.5pi for Delta_c = 10, 20, 30, 60", {}};
        auto pair = base("fig2a_pair", 300.0, 301);
        pair.observables = {"rr"};
        pair.sweep = SweepSpec{"Delta_c", {10.0, 20.0, 30.0, 60.0}};
        auto giant = pair;
        giant.name = "fig2a_giant";
        giant.model = ModelKind::giant;
        p.runs = {pair, giant};
        cat.push_back(p);
    }
    {
        Preset p{"fig2b", "pair double-excitation population at Delta_c = 30 for phi = 40pi, 40.5pi, 41pi, plus the gamma = 0 reference at 41pi", {}};
        auto pair = base("fig2b_pair", 300.0, 301);
        pair.observables = {"rr"};
        pair.sweep = phases;
        auto ref = base("fig2b_reference", 300.0, 301);
        ref.observables = {"rr"};
        ref.params.gamma = 0.0;
        ref.params.phi = Phase::from_pi_units(41.0);
        p.runs = {pair, ref};
        cat.push_back(p);
    }
    {
        Preset p{"fig3", "concurrence, g2 and bare/dressed populations for phi = 40pi, 40.5pi, 41pi", {}};
        auto run = base("fig3", 2000.0, 2001);
        run.observables = {"concurrence", "g2", "plus", "minus", "gg", "rr"};
        run.sweep = phases;
        p.runs = {run};
        cat.push_back(p);
    }
    {
        Preset p{"fig4", "continuous couplings, theta = 5pi/2: population and concurrence for phi = 40pi, 40.5pi, 41pi", {}};
        auto run = base("fig4", 2000.0, 2001);
        run.model = ModelKind::pair_continuous;
        run.theta = 2.5 * std::numbers::pi;
        run.observables = {"rr", "concurrence"};
        run.sweep = phases;
        p.runs = {run};
        cat.push_back(p);
    }
    for (auto& p : cat)
        for (auto& r : p.runs) r.output_dir = "out/" + p.name;
    return cat;
}

}  // namespace

const std::vector<Preset>& preset_catalog() {
    static const std::vector<Preset> cat = build_catalog();
    return cat;
}

const Preset& find_preset(const std::string& name) {
    for (const auto& p : preset_catalog())
        if (p.name == name) return p;
    std::string known;
    for (const auto& p : preset_catalog()) known += (known.empty() ? "" : ", ") + p.name;
    throw ConfigError({"unknown preset '" + name + "' (available: " + known + ")"});
}

}  // namespace rydgiant
