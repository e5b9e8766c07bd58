// Command-line front end: run configs and presets, print rate tables and
// geometry conversions, run the self-test.

#include "rydgiant/config.hpp"
#include "rydgiant/continuous_coupling.hpp"
#include "rydgiant/export.hpp"
#include "rydgiant/geometry.hpp"
#include "rydgiant/giant_model.hpp"
#include "rydgiant/scenario.hpp"
#include "rydgiant/selftest.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <numbers>

using namespace rydgiant;

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kNumericalError = 3;
constexpr int kSelftestFailure = 4;

int report(ScenarioResult& result, const std::string& out_dir) {
    const auto files = write_outputs(result, out_dir);
    int failed = 0;
    for (const auto& p : result.points) {
        if (p.ok) continue;
        ++failed;
        std::cerr << result.manifest.config.name << " point " << p.index << " failed: " << p.error << "\n";
    }
    for (const auto& p : result.points)
        for (const auto& w : p.warnings)
            std::cerr << result.manifest.config.name << " point " << p.index << ": warning: " << w << "\n";
    for (const auto& f : files) std::cout << f.string() << "\n";
    return failed == 0 ? kOk : kNumericalError;
}

ScenarioConfig with_overrides(const ScenarioConfig& c, const std::vector<std::string>& sets) {
    if (sets.empty()) return c;
    return parse_config(to_config_text(c), sets);
}

Phase phase_arg(const std::string& text) {
    const auto v = parse_value(text);
    if (v.kind != ConfigValue::Kind::number) throw ConfigError({"--phi must be a number"});
    return v.has_pi ? Phase::from_pi_units(v.number) : Phase::from_radians(v.number);
}

double number_arg(const std::string& text, const char* what) {
    const auto v = parse_value(text);
    if (v.kind != ConfigValue::Kind::number) throw ConfigError({std::string(what) + " must be a number"});
    return v.as_double();
}

void print_rates(const char* label, const CouplingRates& r) {
    std::printf("%-12s Gamma' = %.12g  Gamma'_ex = %.12g  J'_ex = %.12g  J' = %.12g\n", label, r.Gamma_eff,
                r.Gamma_ex_eff, r.J_ex_eff, r.J_self);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two Rydberg atoms on a waveguide: pair, giant-atom and continuous-coupling dynamics"};
    app.require_subcommand(1);
    app.set_version_flag("--version", RYDGIANT_VERSION);

    std::string config_path, preset_name, out_dir, phi_text = "41pi", theta_text = "2.5pi";
    std::vector<std::string> sets;
    std::size_t workers = 0;
    bool list = false;
    double gamma_rate = 1.0, tol = 1e-9;

    auto* run = app.add_subcommand("run", "run a scenario config file");
    run->add_option("config", config_path, "config file")->required();
    run->add_option("--set", sets, "override, e.g. params.phi=40.5pi");
    run->add_option("--out", out_dir, "output directory (default: output.dir of the config)");
    run->add_option("--workers", workers, "worker threads (default: RYDGIANT_WORKERS or CPU count)");

    auto* preset = app.add_subcommand("preset", "run a figure preset");
    preset->add_option("name", preset_name, "preset name");
    preset->add_flag("--list", list, "list presets");
    preset->add_option("--set", sets, "override applied to every run of the preset");
    preset->add_option("--out", out_dir, "output directory");
    preset->add_option("--workers", workers, "worker threads");

    auto* rates = app.add_subcommand("rates", "discrete and continuous coupling rates with a quadrature check");
    rates->add_option("--phi", phi_text, "accumulated phase, e.g. 41pi");
    rates->add_option("--theta", theta_text, "coupling width, e.g. 2.5pi");
    rates->add_option("--Gamma", gamma_rate, "guided decay rate (1/us)");
    rates->add_option("--tol", tol, "quadrature tolerance");

    LabGeometry geo{2.0 * std::numbers::pi * 2.8e12, 3.1, 2.0 * std::numbers::pi * 1009e12,
                    0.5 * kSpeedOfLight, 0.0, 583.0, 449.0};
    auto* geometry = app.add_subcommand("geometry", "convert laboratory geometry to V6, phi and theta");
    geometry->add_option("--C6", geo.C6, "vdW coefficient (rad/s um^6)");
    geometry->add_option("--R", geo.R, "interatomic distance (um)");
    geometry->add_option("--omega-e", geo.omega_e, "transition angular frequency (rad/s)");
    geometry->add_option("--v-g", geo.v_g, "group velocity (m/s)");
    geometry->add_option("--angle", geo.misalign_angle, "misalignment angle (rad)");
    geometry->add_option("--r-bar", geo.r_bar, "Rydberg orbital radius (nm), 0 for point coupling");
    geometry->add_option("--surface-distance", geo.h, "distance to the evanescent surface (nm)");

    auto* selftest = app.add_subcommand("selftest", "run the oracle and invariant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*run) {
            auto cfg = load_config(config_path, sets);
            auto result = run_scenario(cfg, workers);
            return report(result, out_dir);
        }
        if (*preset) {
            if (list || preset_name.empty()) {
                for (const auto& p : preset_catalog()) {
                    std::cout << p.name << ": " << p.description << "\n";
                    for (const auto& r : p.runs)
                        std::cout << "  " << r.name << " (" << to_string(r.model) << ", " << r.point_count()
                                  << " trajectories)\n";
                }
                return kOk;
            }
            int code = kOk;
            for (const auto& r : find_preset(preset_name).runs) {
                auto result = run_scenario(with_overrides(r, sets), workers);
                code = std::max(code, report(result, out_dir));
            }
            return code;
        }
        if (*rates) {
            const Phase phi = phase_arg(phi_text);
            const double theta = number_arg(theta_text, "--theta");
            std::printf("phi = %.12g pi, theta = %.12g rad, Gamma = %.12g\n", phi.pi_units(), theta, gamma_rate);
            print_rates("discrete", continuous_rates(gamma_rate, phi, 0.0));
            if (theta > 0.0) {
                const auto closed = continuous_rates(gamma_rate, phi, theta);
                const auto quad = quadrature_rates(gamma_rate, phi, theta, tol);
                print_rates("closed form", closed);
                print_rates("quadrature", quad);
                std::printf("max relative difference = %.3e\n", max_relative_difference(quad, closed));
            }
            return kOk;
        }
        if (*geometry) {
            const auto d = derive(geo);
            std::printf("V6    = %.6g rad/s = %.6g 1/us\n", d.V6 * 1e6, d.V6);
            std::printf("d     = %.6g um\n", d.d);
            std::printf("phi   = %.6g rad = %.6g pi\n", d.phi.radians(), d.phi.pi_units());
            if (geo.r_bar > 0.0) std::printf("theta = %.6g rad = %.6g pi\n", d.theta, d.theta / std::numbers::pi);
            for (const auto& n : d.notes) std::printf("note: %s\n", n.c_str());
            return kOk;
        }
        if (*selftest) {
            bool ok = true;
            for (const auto& c : run_selftest()) {
                std::printf("%s  %s (%s)\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
                ok = ok && c.pass;
            }
            return ok ? kOk : kSelftestFailure;
        }
    } catch (const ConfigError& e) {
        for (const auto& p : e.problems()) std::cerr << "config error: " << p << "\n";
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kNumericalError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumericalError;
    }
    return kOk;
}
