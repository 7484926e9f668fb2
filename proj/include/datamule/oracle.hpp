#pragma once

#include <map>
#include <set>
#include <vector>

#include "datamule/planner.hpp"

namespace datamule {

struct OracleLimits {
  int max_sinks = 8;
  int max_fleet = 3;
};

struct ExactSolution {
  // UAV id -> ordered sink ids it collects (possibly empty: staying home is
  // allowed, which lets the optimum beat forced-participation greedy runs).
  std::map<int, std::vector<int>> assignments;
  std::set<int> unvisited;  // only non-empty under active bounds
  double total_cost = 0.0;
  long long explored = 0;  // complete configurations evaluated
};

// Brute-force enumeration of every split of the sinks into per-UAV ordered,
// edge-connected collection routes (first sink adjacent to the UAV's base),
// each visit checked with the same feasibility predicate the planner uses.
// Configurations are ranked by (sinks covered desc, total cost asc,
// lexicographically smallest assignment). Instances beyond the limits are
// refused outright (RefusalError) rather than half-solved.
ExactSolution solve_exact(const Network& net, const std::vector<Uav>& fleet,
                          const CostParams& params, const OracleLimits& limits = {});

}  // namespace datamule
