#pragma once

#include <string>
#include <vector>

#include "datamule/cost.hpp"
#include "datamule/network.hpp"
#include "datamule/planner.hpp"

namespace datamule {

struct VrpCustomer {
  int id = 0;
  Point position;
};

// One-depot vehicle routing instance. When `matrix` is present it holds
// symmetric positive distances with index 0 = depot and customers following
// in listed order; otherwise Euclidean distances apply.
struct VrpInstance {
  Point depot;
  std::vector<VrpCustomer> customers;
  std::vector<std::vector<double>> matrix;
  int vehicles = 1;
};

VrpInstance load_vrp_instance(const std::string& path);

// Collapses all base stations into one super-base placed at their centroid:
// per sink, the cheapest base link survives (ties to the lower original base
// id); capacities sum. Identity on single-base networks.
Network cluster_bases(const Network& net);

// Replaces every edge energy w by 1/w (lengths untouched). Zero-energy edges
// make the transform undefined: DomainError. Involutive within 1e-12.
Network invert_weights(const Network& net);

struct ReducedInstance {
  Network network;
  std::vector<Uav> fleet;
  CostParams params;
};

// Embeds a VRP instance as a degenerate collection problem: customers become
// sinks with zero deadline and zero collection energy, the depot is the sole
// base (connected to every customer), vehicles become identical UAVs, and all
// cost weights are zero so the objective is pure travel energy.
ReducedInstance vrp_to_datamuling(const VrpInstance& vrp);

}  // namespace datamule
