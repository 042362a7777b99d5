#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"hexalloc: control and data channel allocation for hexagonal-cell sensor networks"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<std::string> domain;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Scenario JSON document")->required();
    sub->add_option("--out", out_dir, "Output directory (overrides output_dir)");
    sub->add_option("--domain", domain, "Regulatory domain: US, Europe or Japan (overrides the config)");
  };
  add_common(app.add_subcommand("lattice", "Cell centers and interference edge lists"));
  add_common(app.add_subcommand("static", "Static control and data channel allocation"));
  add_common(app.add_subcommand("dynamic", "Per-elementary-cycle dynamic data channel allocation"));
  add_common(app.add_subcommand("evaluate", "Time-slot comparison of single, static and dynamic schemes"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hexalloc::cli::kExitValidation;
  }

  hexalloc::cli::Overrides overrides;
  overrides.domain = domain;
  if (out_dir) overrides.output_dir = *out_dir;
  const std::string command = app.get_subcommands().front()->get_name();
  return hexalloc::cli::run_command(command, config_path, overrides, std::cout, std::cerr);
}
