#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "datamule/cost.hpp"
#include "datamule/network.hpp"

namespace datamule {

struct Uav {
  int id = 0;
  double speed = 0.0;  // metres per minute, must be positive
  int home_base = 0;   // base id the round starts from

  // Round-local state; plan_round works on copies and never mutates its input.
  double clock = 0.0;  // minutes since takeoff
  NodeRef position;
  std::vector<int> visited;   // collected sink ids in visit order
  double energy_spent = 0.0;  // accumulated across rounds, reporting only
};

enum class LegPhase {
  Collection,  // hop ending in a collected sink
  Transit,     // repositioning hop through an already handled sink
  Delivery,    // hop of the delivery route
};

struct PlanLeg {
  NodeRef from;
  NodeRef to;
  double energy = 0.0;
  double length = 0.0;
  double arrival = 0.0;  // clock on reaching `to`, before any waiting
  LegPhase phase = LegPhase::Collection;
};

struct Plan {
  int uav_id = 0;
  // [home base, collected sinks in order]; transit stops are not listed here
  // (each sink appears at most once per round), the legs carry them.
  std::vector<NodeRef> collection_path;
  // [last collection node, ..., base]; just [home base] when nothing was
  // collected (the UAV stays put).
  std::vector<NodeRef> delivery_path;
  std::vector<PlanLeg> legs;
  std::vector<VisitOutcome> arrivals;  // one per collected sink
  CostBreakdown breakdown;
};

struct RoundResult {
  std::vector<Plan> plans;  // fleet order
  std::set<int> unvisited;  // sinks no UAV could feasibly reach
  double total_cost = 0.0;
  int iterations = 0;        // outer selection/assignment rounds
  long long work_ops = 0;    // candidate evaluations + conflict comparisons
};

// A UAV's proposed next move: the target sink, its marginal cost
// (hop/route energy plus the visit cost at the projected arrival), and the
// physical node route from the current position (two entries when adjacent).
struct SelectChoice {
  int sink_id = 0;
  double marginal_cost = 0.0;
  double arrival = 0.0;
  std::vector<NodeRef> hops;
};

// True when a visit at `projected_arrival` respects the active bounds:
// the sink accepts visits only from its effective wait threshold onward,
// and lateness may not exceed its effective late threshold.
bool feasible_under_thresholds(const SinkNode& node, double projected_arrival,
                               const CostParams& params);

// Cheapest feasible move to a *remaining* sink adjacent to the UAV's current
// position; ties go to the lower sink id. Empty when no adjacent remaining
// sink exists or all of them are infeasible.
std::optional<SelectChoice> select_next(const Network& net, const Uav& uav,
                                        const std::set<int>& remaining,
                                        const CostParams& params);

// Contested sinks go to the proposer with the least marginal cost (ties to
// the lower UAV id); every proposed sink gets assigned. Input maps UAV id to
// (sink id, marginal cost); output maps sink id to the winning UAV id.
std::map<int, int> resolve_conflicts(
    const std::map<int, std::pair<int, double>>& choices);

struct PlanOptions {
  // Persistent runs relocate UAVs to their delivery bases and deliberately
  // skip this check from the second round on.
  bool enforce_capacity = true;
};

// One full collection + delivery round for the whole fleet: iterated
// cheapest-feasible selection with conflict resolution, transit fallback for
// UAVs whose neighborhood is exhausted, then minimum-energy delivery.
// Deterministic for identical inputs.
RoundResult plan_round(const Network& net, const std::vector<Uav>& fleet,
                       const CostParams& params, const PlanOptions& options = {});

}  // namespace datamule
