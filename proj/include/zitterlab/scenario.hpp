#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "zitterlab/errors.hpp"

// Scenario front door: JSON config in, trajectory CSV + report JSON out.
// Config format: one scenario per file, "kind" in {dirac, integrate,
// stability, zerospin, cronon, audit}; 4-vectors are [t,x,y,z] arrays,
// boosts either a scalar (along x) or a [x,y,z] array.

namespace zitterlab {

using json = nlohmann::ordered_json;

struct ScenarioOptions {
    // overrides the per-module validation tolerances when set
    double tolerance = -1.0;
    bool has_tolerance() const { return tolerance >= 0.0; }
};

struct ScenarioResult {
    json report;
    std::filesystem::path report_path;
    std::filesystem::path csv_path;  // empty when the scenario has no trajectory
};

/// Executes one scenario config, writing report.json (always) and
/// trajectory.csv (when the scenario produces samples) under out_dir.
/// Throws the module error types on failure.
ScenarioResult run_scenario(const json& config, const std::filesystem::path& out_dir,
                            const ScenarioOptions& opts = {});

/// Reads the config file and runs it.
ScenarioResult run_scenario_file(const std::filesystem::path& config_path,
                                 const std::filesystem::path& out_dir,
                                 const ScenarioOptions& opts = {});

struct SweepRunOutcome {
    double value = 0.0;
    std::filesystem::path out_dir;
    bool ok = false;
    std::string error_kind;
    std::string error_message;
    int exit_code = 0;
};

/// Runs one scenario per value (in parallel), overriding the dotted config
/// path `param` each time. Outputs land in out_dir/run_<k>/, plus a
/// sweep_summary.json. An empty value list writes nothing.
std::vector<SweepRunOutcome> run_sweep(const json& config, const std::string& param,
                                       const std::vector<double>& values,
                                       const std::filesystem::path& out_dir,
                                       const ScenarioOptions& opts = {});

/// Template configs, one complete example per scenario kind.
json seed_configs();

/// Error record written next to the outputs of a failed run.
void write_error_record(const std::filesystem::path& out_dir, const Error& error);

}  // namespace zitterlab
