#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "datamule/planner.hpp"

namespace datamule {

// Canonical per-round identity: every UAV's (collection path, delivery path)
// in ascending UAV id order, rendered to a single string.
std::string canonical_signature(const RoundResult& round);

struct PeriodInfo {
  int start = 0;   // zero-based index of the first periodic round
  int length = 0;  // period length in rounds
};

// Smallest (start, then length) such that sig[k] == sig[k + length] for every
// k >= start inside the window, with at least one comparison made.
// Needs two or more rounds; empty when the tail never repeats.
std::optional<PeriodInfo> detect_period(std::span<const std::string> signatures);
std::optional<PeriodInfo> detect_period(const std::vector<RoundResult>& rounds);

// Moves each UAV's home to the base its plan delivered to; UAVs that
// collected nothing stay where they are. Clocks and visit state reset,
// energy_spent accumulates.
std::vector<Uav> relocate_fleet(const std::vector<Uav>& fleet,
                                const RoundResult& round);

struct PersistentConfig {
  int max_rounds = 1;
  bool stop_on_period = true;
  bool enforce_initial_capacity = true;
};

struct PersistentRun {
  std::vector<RoundResult> rounds;
  std::vector<std::string> signatures;        // one per round
  std::vector<std::vector<int>> start_bases;  // per round, per fleet slot
  std::optional<PeriodInfo> period;
  std::vector<Uav> final_fleet;  // relocated, with accumulated energy_spent
};

// Runs rounds back to back, relocating the fleet between them. Capacity is
// validated for the initial configuration only; deliveries may legitimately
// crowd a base. Stops on period detection (when configured) or max_rounds.
PersistentRun run_persistent(const Network& net, std::vector<Uav> fleet,
                             const CostParams& params,
                             const PersistentConfig& config);

}  // namespace datamule
