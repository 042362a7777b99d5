#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hexalloc/coloring.hpp"
#include "hexalloc/dynamic_alloc.hpp"
#include "hexalloc/eval.hpp"
#include "hexalloc/lattice.hpp"
#include "hexalloc/spectrum.hpp"

namespace hexalloc::cli {

/// Rejected input; maps to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable input or unwritable output; maps to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Overrides {
  std::optional<std::string> domain;
  std::optional<std::filesystem::path> output_dir;
};

struct ScenarioConfig {
  Lattice lattice = Lattice::build(0, 1.0);
  std::optional<RegulatoryDomain> domain;
  int us_data_card = 24;
  std::vector<SuperframeConfig> superframes;
  RequestScenario workload;
  SolverOptions solver;
  std::filesystem::path output_dir = "hexalloc-out";

  /// Throws ConfigError when no domain was configured.
  ChannelPlan plan() const;
  const RegulatoryDomain& require_domain() const;
  void require_superframes() const;
};

/// Validates a parsed document. Messages name the offending field, e.g.
/// "superframes[2].so: must not exceed bo (5)".
ScenarioConfig parse_config(const nlohmann::json& doc, const Overrides& overrides = {});

/// Reads and parses a config file. Syntax errors report line and column.
ScenarioConfig load_config(const std::filesystem::path& path, const Overrides& overrides = {});

}  // namespace hexalloc::cli
