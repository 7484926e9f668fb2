#include "datamule/cost.hpp"

#include <algorithm>
#include <cmath>

#include "datamule/planner.hpp"

namespace datamule {

double CostParams::effective_wait_threshold(int sink_id) const {
  if (!bounds_wait()) return kUnbounded;
  auto it = node_overrides.find(sink_id);
  if (it != node_overrides.end() && it->second.wait != kUnbounded) return it->second.wait;
  return wait_threshold;
}

double CostParams::effective_late_threshold(int sink_id) const {
  if (!bounds_late()) return kUnbounded;
  auto it = node_overrides.find(sink_id);
  if (it != node_overrides.end() && it->second.late != kUnbounded) return it->second.late;
  return late_threshold;
}

void validate(const CostParams& params) {
  if (params.alpha < 0 || params.beta < 0 || params.gamma < 0) {
    throw ParameterError("cost weights must be non-negative");
  }
  auto check = [](double v, const char* what) {
    if (v < 0 || std::isnan(v)) {
      throw ParameterError(std::string(what) + " threshold must be non-negative");
    }
  };
  check(params.wait_threshold, "wait");
  check(params.late_threshold, "late");
  for (const auto& [id, t] : params.node_overrides) {
    (void)id;
    check(t.wait, "wait");
    check(t.late, "late");
  }
}

VisitOutcome visit_cost(const SinkNode& node, double arrival_min,
                        const CostParams& params) {
  VisitOutcome out;
  out.sink_id = node.id;
  out.arrival = arrival_min;
  out.wait = std::max(0.0, node.revisit_deadline - arrival_min);
  out.lateness = std::max(0.0, arrival_min - node.revisit_deadline);
  out.node_cost = params.alpha * out.wait + params.beta * out.lateness +
                  params.gamma * node.collection_energy;
  return out;
}

CostBreakdown collection_cost(const Network& net, std::span<const NodeRef> path,
                              const Uav& uav, const CostParams& params) {
  if (path.size() < 2) {
    throw InvalidPathError("collection path needs a base and at least one sink");
  }
  if (!path[0].is_base() || path[0].id != uav.home_base) {
    throw InvalidPathError("collection path must start at the UAV's base B" +
                           std::to_string(uav.home_base));
  }
  if (uav.speed <= 0) throw ParameterError("UAV speed must be positive");

  CostBreakdown bd;
  double clock = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!path[i].is_sink()) {
      throw InvalidPathError("collection path may only visit sinks after the base");
    }
    const UavEdge* e = net.find_edge(path[i - 1], path[i]);
    if (!e) {
      throw InvalidPathError("no edge between " + path[i - 1].label() + " and " +
                             path[i].label());
    }
    clock += e->length / uav.speed;
    if (i == 1) {
      bd.launch_energy = e->energy;
    } else {
      bd.travel_energy += e->energy;
    }
    VisitOutcome visit = visit_cost(net.sink(path[i].id), clock, params);
    bd.node_costs += visit.node_cost;
    if (params.wait_advances_clock) clock += visit.wait;
  }
  bd.total = bd.launch_energy + bd.node_costs + bd.travel_energy + bd.delivery_energy;
  return bd;
}

PathResult delivery_cost(const Network& net, NodeRef last_sink) {
  if (!net.has_node(last_sink)) {
    throw ParameterError("unknown node " + last_sink.label());
  }
  std::vector<NodeRef> targets;
  targets.reserve(net.bases().size());
  for (const BaseStation& b : net.bases()) targets.push_back(NodeRef::base(b.id));
  if (targets.empty()) throw NoPathError("network has no base stations");

  auto routes = shortest_paths(net, last_sink, targets,
                               [](const NodeRef& n) { return n.is_sink(); });
  const PathResult* best = nullptr;
  for (const auto& r : routes) {
    // targets are sorted by base id, so strict less keeps the lower id on ties
    if (r && (!best || r->energy < best->energy)) best = &*r;
  }
  if (!best) {
    throw NoPathError("no base station reachable from " + last_sink.label());
  }
  return *best;
}

double objective_total(const RoundResult& round) {
  double z = 0.0;
  for (const Plan& p : round.plans) z += p.breakdown.total;
  return z;
}

}  // namespace datamule
