#pragma once

#include <limits>
#include <map>
#include <span>

#include "datamule/network.hpp"

namespace datamule {

struct Uav;          // defined in planner.hpp
struct RoundResult;  // defined in planner.hpp

// Sentinel meaning "this bound is not in force".
constexpr double kUnbounded = std::numeric_limits<double>::infinity();

// Which visit-timing bounds are active. Free enforces none regardless of the
// threshold fields; the bounded scenarios activate their respective bounds.
enum class Scenario { Free, LateBounded, WaitBounded, BothBounded };

struct NodeThresholds {
  double wait = kUnbounded;
  double late = kUnbounded;
};

// Weights and timing policy for the visit cost
//   F(r, e) = alpha * wait + beta * lateness + gamma * e
// where wait = max(0, r - arrival) and lateness = max(0, arrival - r).
// alpha and beta carry units of energy per minute so F stays an energy.
struct CostParams {
  double alpha = 0.5;
  double beta = 0.5;
  double gamma = 1.0;
  Scenario scenario = Scenario::Free;
  double wait_threshold = kUnbounded;  // W: a sink accepts visits only once
                                       // the mission clock has reached W
  double late_threshold = kUnbounded;  // L: lateness above L is infeasible
  std::map<int, NodeThresholds> node_overrides;  // per sink id
  bool wait_advances_clock = true;  // early arrivals sit at the sink until due

  bool bounds_wait() const {
    return scenario == Scenario::WaitBounded || scenario == Scenario::BothBounded;
  }
  bool bounds_late() const {
    return scenario == Scenario::LateBounded || scenario == Scenario::BothBounded;
  }
  double effective_wait_threshold(int sink_id) const;
  double effective_late_threshold(int sink_id) const;
};

// Throws ParameterError on negative weights or thresholds.
void validate(const CostParams& params);

struct VisitOutcome {
  int sink_id = 0;
  double arrival = 0.0;
  double wait = 0.0;      // minutes spent waiting for the deadline
  double lateness = 0.0;  // minutes past the deadline; wait * lateness == 0
  double node_cost = 0.0;
};

struct CostBreakdown {
  double launch_energy = 0.0;    // first hop out of the base
  double node_costs = 0.0;       // sum of visit costs F
  double travel_energy = 0.0;    // remaining collection hops (transit included)
  double delivery_energy = 0.0;  // hops of the delivery route
  double total = 0.0;            // always the sum of the four parts
};

VisitOutcome visit_cost(const SinkNode& node, double arrival_min,
                        const CostParams& params);

// Evaluates a collection route [base, sink, sink, ...] hop by hop: launch
// energy, a visit cost at every listed sink (clock advanced by waits when
// configured), and travel energy for the remaining hops. The path must start
// at the UAV's home base and every consecutive pair must share an edge
// (InvalidPathError otherwise). Delivery is not included.
CostBreakdown collection_cost(const Network& net, std::span<const NodeRef> path,
                              const Uav& uav, const CostParams& params);

// Minimum-energy route from the last collected sink to the nearest base
// (ties to the lower base id). No visit costs accrue on delivery.
// Throws NoPathError when no base is reachable.
PathResult delivery_cost(const Network& net, NodeRef last_sink);

// Fleet-wide objective: the sum of every plan's breakdown total.
double objective_total(const RoundResult& round);

}  // namespace datamule
