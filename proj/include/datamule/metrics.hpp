#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "datamule/persistence.hpp"
#include "datamule/planner.hpp"

namespace datamule {

// What a sweep varies between runs. Parameter is one of "alpha", "beta",
// "gamma", "speed" (uniform fleet speed) or "none" for a constant sweep.
struct SweepSchedule {
  std::string parameter = "none";
  double increment = 0.0;
};

struct SweepRecord {
  int run_index = 0;
  std::string parameter;
  double value = 0.0;
  std::map<int, double> per_uav_cost;
  double average_cost = 0.0;  // mean of per_uav_cost values
  int unvisited_count = 0;
  std::optional<PeriodInfo> period;

  // Extra context for analysis; not part of the CSV schema.
  double waiting_total = 0.0;  // raw waiting minutes summed over the fleet
  std::string signature;
};

// Runs `runs` planning rounds, nudging the chosen parameter by `increment`
// each run (value_k = base + k * increment). With `chain` the fleet relocates
// to its delivery bases between runs, mirroring persistent operation;
// without it every run starts from the configured bases. Throws
// ConfigurationError on an unknown parameter or a sweep that drives a value
// negative (speeds nonpositive).
std::vector<SweepRecord> run_sweep(const Network& net, std::vector<Uav> fleet,
                                   const CostParams& base_params,
                                   const SweepSchedule& schedule, int runs,
                                   bool chain = true);

enum class ThresholdKind { Late, Waiting };

struct ThresholdPoint {
  double threshold = 0.0;
  int unvisited = 0;
};

// One independent round per threshold (always from the configured bases),
// with the scenario forced to the matching bounded mode. Thresholds must be
// ascending; kUnbounded is a legal final entry.
std::vector<ThresholdPoint> unvisited_vs_threshold(
    const Network& net, const std::vector<Uav>& fleet, const CostParams& params,
    std::span<const double> thresholds, ThresholdKind kind);

// CSV schema:
// run,param_name,param_value,uav_id,uav_cost,avg_cost,unvisited,period_start,period_len
void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records);
std::vector<SweepRecord> read_sweep_csv(std::istream& in);

void write_threshold_csv(std::ostream& out, std::span<const ThresholdPoint> points);

}  // namespace datamule
