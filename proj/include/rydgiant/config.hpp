#pragma once

#include "rydgiant/integrator.hpp"
#include "rydgiant/pair_model.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rydgiant {

enum class ModelKind { pair, giant, pair_continuous };

std::string to_string(ModelKind kind);
std::string to_string(StepMode mode);

/// Sweep over one numeric parameter. Values are in the parameter's own unit;
/// for phi that unit is pi (so 40.5 means 40.5 pi).
struct SweepSpec {
    std::string parameter;
    std::vector<double> values;
};

struct ScenarioConfig {
    std::string name = "scenario";
    ModelKind model = ModelKind::pair;
    PairParams params;
    double theta = 0.0;  // coupling width (rad), pair_continuous only
    std::string initial_state = "double_excited";  // ground | double_excited | plus | minus | custom
    std::optional<ComplexMatrix> custom_initial;
    IntegratorConfig integrator;
    std::vector<std::string> observables;  // empty = model default
    std::optional<SweepSpec> sweep;
    std::string output_dir = "out";
    std::string format = "csv";  // csv | jsonl

    std::size_t point_count() const { return sweep ? sweep->values.size() : 1; }
};

/// Carries every problem found, not only the first.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

/// Parsed value of the key = value format. Numbers may carry a pi factor:
/// "40.5pi", "-pi", "5pi/2".
struct ConfigValue {
    enum class Kind { number, string, boolean, array };
    Kind kind = Kind::number;
    double number = 0.0;  // coefficient of pi when has_pi
    bool has_pi = false;
    std::string text;
    bool flag = false;
    std::vector<ConfigValue> items;

    double as_double() const;
};

ConfigValue parse_value(std::string_view text);  // throws ConfigError

/// Flat "section.key" -> value map of a config file.
std::map<std::string, ConfigValue> parse_tables(std::string_view text);

/// Overrides have the form "section.key=value" (root keys without section).
ScenarioConfig parse_config(std::string_view text, const std::vector<std::string>& overrides = {});
ScenarioConfig load_config(const std::filesystem::path& path,
                           const std::vector<std::string>& overrides = {});

/// Text that parses back to an identical configuration.
std::string to_config_text(const ScenarioConfig& config);

std::vector<std::string> validation_problems(const ScenarioConfig& config);
void validate(const ScenarioConfig& config);  // throws ConfigError

std::vector<std::string> sweepable_parameters();
std::vector<std::string> default_observables(ModelKind model);

/// Configuration of sweep point i (the sweep removed, the parameter set).
ScenarioConfig at_sweep_point(const ScenarioConfig& config, std::size_t index);

}  // namespace rydgiant
