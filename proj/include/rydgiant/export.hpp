#pragma once

#include "rydgiant/scenario.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace rydgiant {

/// Header "t_us,<obs>...", one row per sample, 17 significant digits,
/// period decimal separator, empty cell for undefined values.
std::string to_csv(const TimeSeries& series);

/// One JSON object per sample: {"t_us": ..., "<obs>": ... | null}.
std::string to_jsonl(const TimeSeries& series);

/// Structured manifest: config echo, version, wall time, per-point
/// diagnostics, derived rates and warnings.
std::string manifest_json(const ScenarioResult& result);

/// Writes one data file per successful point and the manifest into
/// config.output_dir (or `dir` when given). Returns the paths written and
/// records them in result.manifest.files. Throws std::runtime_error naming
/// the path on I/O failure.
std::vector<std::filesystem::path> write_outputs(ScenarioResult& result,
                                                 const std::filesystem::path& dir = {});

}  // namespace rydgiant
