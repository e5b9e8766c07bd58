#pragma once

#include "rydgiant/config.hpp"
#include "rydgiant/continuous_coupling.hpp"
#include "rydgiant/integrator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rydgiant {

/// Quantities derived from the parameters of one trajectory, kept for the manifest.
struct DerivedRates {
    ExchangeRates exchange;
    std::optional<Complex> upsilon;             // needs Delta_c != 0
    std::optional<CouplingRates> continuous;    // pair_continuous only
    std::optional<Complex> upsilon_continuous;  // pair_continuous with Delta_c != 0
};

struct TrajectoryResult {
    std::size_t index = 0;
    std::optional<double> sweep_value;
    bool ok = false;
    std::string error;  // set when !ok
    TimeSeries series;
    DerivedRates derived;
    std::vector<std::string> warnings;
    double wall_seconds = 0.0;
};

struct RunManifest {
    ScenarioConfig config;
    std::string version;
    std::size_t workers = 1;
    double wall_seconds = 0.0;
    std::vector<std::string> files;  // filled by write_outputs
};

struct ScenarioResult {
    std::vector<TrajectoryResult> points;  // in sweep order
    RunManifest manifest;

    bool all_ok() const;
};

DensityMatrix initial_state(const ScenarioConfig& config);

/// Runs one trajectory (config must not carry a sweep). Throws on failure.
TrajectoryResult run_point(const ScenarioConfig& point);

/// Worker count: RYDGIANT_WORKERS if set to a positive integer, else the
/// hardware concurrency.
std::size_t default_workers();

/// Runs every sweep point on a worker pool. A failing point is reported in
/// its TrajectoryResult and does not stop the others.
ScenarioResult run_scenario(const ScenarioConfig& config, std::size_t workers = 0);

/// First time the observable exceeds threshold, linearly interpolated between
/// the bracketing samples. NaN samples are skipped. Throws for an unknown name.
std::optional<double> detect_onset(const TimeSeries& series, const std::string& observable,
                                   double threshold);

/// First time the observable passes from above `level` to below it,
/// linearly interpolated. NaN samples are skipped.
std::optional<double> detect_downward_crossing(const TimeSeries& series,
                                               const std::string& observable, double level);

struct Preset {
    std::string name;
    std::string description;
    std::vector<ScenarioConfig> runs;  // one trajectory per curve of the figure
};

const std::vector<Preset>& preset_catalog();
const Preset& find_preset(const std::string& name);  // throws ConfigError

}  // namespace rydgiant
