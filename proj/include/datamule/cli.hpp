#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "datamule/cost.hpp"
#include "datamule/metrics.hpp"
#include "datamule/network.hpp"
#include "datamule/oracle.hpp"
#include "datamule/planner.hpp"

namespace datamule {

struct FleetEntry {
  int id = 0;
  double speed = 0.0;
  int base = 0;
};

struct NetworkSource {
  enum class Kind { Generated, File, GpsCsv };
  Kind kind = Kind::Generated;
  RandomNetworkSpec gen;            // Generated
  std::string path;                 // File (network JSON)
  std::string sinks_csv;            // GpsCsv
  std::string bases_csv;            // GpsCsv
  int base_links = 3;               // GpsCsv
  double energy_per_metre = 1.0;    // GpsCsv
  // Optional redraw of node attributes (mainly for ingested maps).
  std::optional<Interval> deadline_range;
  std::optional<Interval> energy_range;
};

struct RunSpec {
  enum class Mode { Single, Persistent, Sweep, ThresholdSweep };
  Mode mode = Mode::Single;
  // persistent
  int max_rounds = 10;
  bool stop_on_period = true;
  bool round_svgs = false;
  // parameter sweep
  SweepSchedule schedule;
  int runs = 1;
  bool chain = true;
  // threshold sweep
  ThresholdKind threshold_kind = ThresholdKind::Late;
  std::vector<double> thresholds;
};

struct ScenarioConfig {
  NetworkSource network;
  std::vector<FleetEntry> fleet;
  CostParams cost;
  RunSpec run;
  OracleLimits oracle;
  std::string vrp_path;  // for the reduce command
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  bool svg = true;
  std::string base_dir;  // directory of the config file; relative paths anchor here
};

// Parses and validates a scenario file. Unknown scenario names, missing
// fleet bases, inconsistent threshold settings and the like all surface as
// ConfigurationError.
ScenarioConfig load_scenario_config(const std::string& path);

struct CliOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<bool> svg;
};

void apply_overrides(ScenarioConfig& config, const CliOverrides& overrides);

// Materialize the configured pieces. build_network requires a seed whenever
// randomness is involved (generation or attribute redraws).
Network build_network(const ScenarioConfig& config);
std::vector<Uav> build_fleet(const ScenarioConfig& config, const Network& net);

// Subcommand bodies. They throw; the binary maps exception kinds to exit
// codes (2 config/input, 3 no path or infeasible, 4 exact-solver refusal).
void cmd_plan(const ScenarioConfig& config);
void cmd_persist(const ScenarioConfig& config);
void cmd_sweep(const ScenarioConfig& config);
void cmd_verify(const ScenarioConfig& config);
void cmd_reduce(const ScenarioConfig& config);
void cmd_gen(const ScenarioConfig& config);

}  // namespace datamule
