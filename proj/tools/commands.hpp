#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "config.hpp"

namespace hexalloc::cli {

enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitIo = 2 };

/// cells.csv, edges_control.txt, edges_data.txt
void cmd_lattice(const ScenarioConfig& cfg, std::ostream& log);

/// coloring_control.csv, coloring_data.csv, static_allocation.csv,
/// static_summary.json. Returns kExitValidation (after writing the summary)
/// when the control set cannot cover the control graph.
int cmd_static(const ScenarioConfig& cfg, std::ostream& log);

/// activity.csv, allocation.csv, allocation.json, cycles.csv
void cmd_dynamic(const ScenarioConfig& cfg, std::ostream& log);

/// schemes.csv, max_channels.csv, evaluation_summary.json
void cmd_evaluate(const ScenarioConfig& cfg, std::ostream& log);

/// Loads the config, dispatches, and maps failures to exit codes.
int run_command(std::string_view command, const std::filesystem::path& config_path, const Overrides& overrides,
                std::ostream& log, std::ostream& err);

}  // namespace hexalloc::cli
