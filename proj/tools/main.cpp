#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "datamule/cli.hpp"
#include "datamule/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"datamule - persistent UAV data collection planner"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"plan", "plan and cost a single collection round"},
      {"persist", "run rounds back to back, relocating the fleet between them"},
      {"sweep", "parameter sweep or unvisited-vs-threshold curve"},
      {"verify", "compare the greedy plan against exhaustive search"},
      {"reduce", "embed a vehicle routing instance and plan it"},
      {"gen", "build a network and write it out"},
  };

  std::string config_path;
  std::uint64_t seed = 0;
  std::string out_dir;
  bool svg_on = false;
  bool svg_off = false;
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--config", config_path, "scenario file (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "random seed (overrides the scenario)");
    sub->add_option("--out", out_dir, "output directory (overrides the scenario)");
    sub->add_flag("--svg", svg_on, "force SVG rendering on");
    sub->add_flag("--no-svg", svg_off, "skip SVG rendering");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  using namespace datamule;
  try {
    CLI::App* sub = app.get_subcommands().front();

    ScenarioConfig config = load_scenario_config(config_path);
    CliOverrides overrides;
    if (sub->count("--seed") > 0) overrides.seed = seed;
    if (sub->count("--out") > 0) overrides.out_dir = out_dir;
    if (svg_on) overrides.svg = true;
    if (svg_off) overrides.svg = false;
    apply_overrides(config, overrides);

    const std::string& name = sub->get_name();
    if (name == "plan") cmd_plan(config);
    else if (name == "persist") cmd_persist(config);
    else if (name == "sweep") cmd_sweep(config);
    else if (name == "verify") cmd_verify(config);
    else if (name == "reduce") cmd_reduce(config);
    else cmd_gen(config);
    return 0;
  } catch (const RefusalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const NoPathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConfigurationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IngestionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidPathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
