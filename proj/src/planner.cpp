#include "datamule/planner.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace datamule {

bool feasible_under_thresholds(const SinkNode& node, double projected_arrival,
                               const CostParams& params) {
  const double wait_gate = params.effective_wait_threshold(node.id);
  if (wait_gate != kUnbounded && projected_arrival < wait_gate) return false;
  const double late_cap = params.effective_late_threshold(node.id);
  if (late_cap != kUnbounded &&
      projected_arrival - node.revisit_deadline > late_cap) {
    return false;
  }
  return true;
}

namespace {

std::optional<SelectChoice> select_adjacent(const Network& net, const Uav& uav,
                                            const std::set<int>& remaining,
                                            const CostParams& params,
                                            long long* ops) {
  std::optional<SelectChoice> best;
  for (const Network::Neighbor& nb : net.neighbors(uav.position)) {
    if (!nb.node.is_sink() || !remaining.count(nb.node.id)) continue;
    if (ops) ++*ops;
    const SinkNode& node = net.sink(nb.node.id);
    const double arrival = uav.clock + nb.length / uav.speed;
    if (!feasible_under_thresholds(node, arrival, params)) continue;
    const double cost = nb.energy + visit_cost(node, arrival, params).node_cost;
    // neighbor lists are sorted by id, so strict less keeps the lower sink id
    if (!best || cost < best->marginal_cost) {
      best = SelectChoice{node.id, cost, arrival, {uav.position, nb.node}};
    }
  }
  return best;
}

// Fallback for a UAV whose whole neighborhood is already handled: ride the
// cheapest route through non-remaining sinks to some remaining sink, paying
// only edge energy on the way.
std::optional<SelectChoice> select_transit(const Network& net, const Uav& uav,
                                           const std::set<int>& remaining,
                                           const CostParams& params,
                                           long long* ops) {
  std::vector<NodeRef> targets;
  targets.reserve(remaining.size());
  for (int id : remaining) targets.push_back(NodeRef::sink(id));
  auto routes = shortest_paths(
      net, uav.position, targets, [&remaining](const NodeRef& n) {
        return n.is_sink() && !remaining.count(n.id);
      });

  std::optional<SelectChoice> best;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (!routes[i] || routes[i]->nodes.size() < 2) continue;
    if (ops) ++*ops;
    const SinkNode& node = net.sink(targets[i].id);
    const double arrival = uav.clock + routes[i]->length / uav.speed;
    if (!feasible_under_thresholds(node, arrival, params)) continue;
    const double cost =
        routes[i]->energy + visit_cost(node, arrival, params).node_cost;
    if (!best || cost < best->marginal_cost) {
      best = SelectChoice{node.id, cost, arrival, routes[i]->nodes};
    }
  }
  return best;
}

struct UavWork {
  Uav uav;
  std::vector<PlanLeg> legs;
  std::vector<VisitOutcome> arrivals;
  CostBreakdown breakdown;
};

void apply_move(const Network& net, UavWork& w, const SelectChoice& choice,
                const CostParams& params) {
  // traverse every hop of the route; only the final node is a collection
  for (std::size_t i = 1; i < choice.hops.size(); ++i) {
    const UavEdge* e = net.find_edge(choice.hops[i - 1], choice.hops[i]);
    assert(e != nullptr);
    w.uav.clock += e->length / w.uav.speed;
    const bool final_hop = (i + 1 == choice.hops.size());
    PlanLeg leg;
    leg.from = choice.hops[i - 1];
    leg.to = choice.hops[i];
    leg.energy = e->energy;
    leg.length = e->length;
    leg.arrival = w.uav.clock;
    leg.phase = final_hop ? LegPhase::Collection : LegPhase::Transit;
    if (w.legs.empty()) {
      w.breakdown.launch_energy = e->energy;
    } else {
      w.breakdown.travel_energy += e->energy;
    }
    w.legs.push_back(leg);
  }
  VisitOutcome visit = visit_cost(net.sink(choice.sink_id), w.uav.clock, params);
  w.breakdown.node_costs += visit.node_cost;
  if (params.wait_advances_clock) w.uav.clock += visit.wait;
  w.arrivals.push_back(visit);
  w.uav.visited.push_back(choice.sink_id);
  w.uav.position = NodeRef::sink(choice.sink_id);
}

}  // namespace

std::optional<SelectChoice> select_next(const Network& net, const Uav& uav,
                                        const std::set<int>& remaining,
                                        const CostParams& params) {
  if (uav.speed <= 0) throw ParameterError("UAV speed must be positive");
  return select_adjacent(net, uav, remaining, params, nullptr);
}

std::map<int, int> resolve_conflicts(
    const std::map<int, std::pair<int, double>>& choices) {
  std::map<int, int> winner;      // sink -> uav
  std::map<int, double> best;     // sink -> winning cost
  for (const auto& [uav_id, pick] : choices) {
    const auto& [sink_id, cost] = pick;
    auto it = winner.find(sink_id);
    if (it == winner.end() || cost < best[sink_id] ||
        (cost == best[sink_id] && uav_id < it->second)) {
      winner[sink_id] = uav_id;
      best[sink_id] = cost;
    }
  }
  return winner;
}

RoundResult plan_round(const Network& net, const std::vector<Uav>& fleet,
                       const CostParams& params, const PlanOptions& options) {
  if (fleet.empty()) throw ConfigurationError("fleet is empty");
  validate(params);

  std::map<int, int> per_base;
  std::set<int> ids;
  for (const Uav& u : fleet) {
    if (!ids.insert(u.id).second) {
      throw ConfigurationError("duplicate UAV id " + std::to_string(u.id));
    }
    if (u.speed <= 0) {
      throw ConfigurationError("UAV " + std::to_string(u.id) +
                               " speed must be positive");
    }
    if (!net.has_base(u.home_base)) {
      throw ConfigurationError("UAV " + std::to_string(u.id) +
                               " references unknown base B" +
                               std::to_string(u.home_base));
    }
    ++per_base[u.home_base];
  }
  if (options.enforce_capacity) {
    for (const auto& [base_id, count] : per_base) {
      if (count > net.base(base_id).capacity) {
        throw ConfigurationError("base B" + std::to_string(base_id) + " hosts " +
                                 std::to_string(count) + " UAVs but has capacity " +
                                 std::to_string(net.base(base_id).capacity));
      }
    }
  }

  RoundResult result;
  std::vector<UavWork> work(fleet.size());
  for (std::size_t i = 0; i < fleet.size(); ++i) {
    work[i].uav = fleet[i];
    work[i].uav.clock = 0.0;
    work[i].uav.position = NodeRef::base(fleet[i].home_base);
    work[i].uav.visited.clear();
  }

  std::set<int> remaining;
  for (const SinkNode& s : net.sinks()) remaining.insert(s.id);

  if (!remaining.empty()) {
    for (const Uav& u : fleet) {
      if (net.neighbors(NodeRef::base(u.home_base)).empty()) {
        throw ConfigurationError("base B" + std::to_string(u.home_base) +
                                 " has no UAV edges");
      }
    }
  }

  const int iteration_cap =
      static_cast<int>(net.sinks().size() + fleet.size()) + 2;
  while (!remaining.empty()) {
    ++result.iterations;
    if (result.iterations > iteration_cap) {
      throw std::logic_error("planner failed to terminate within its bound");
    }

    // every UAV proposes its cheapest feasible move, if any
    std::map<int, SelectChoice> proposals;          // by uav id
    std::map<int, std::pair<int, double>> choices;  // for conflict resolution
    for (UavWork& w : work) {
      auto pick = select_adjacent(net, w.uav, remaining, params, &result.work_ops);
      if (!pick) {
        pick = select_transit(net, w.uav, remaining, params, &result.work_ops);
      }
      if (pick) {
        choices[w.uav.id] = {pick->sink_id, pick->marginal_cost};
        proposals[w.uav.id] = std::move(*pick);
      }
    }
    if (proposals.empty()) break;  // nobody can feasibly move

    // literal pairwise scan, counted as the algorithm's inner-loop work
    result.work_ops +=
        static_cast<long long>(choices.size()) * static_cast<long long>(choices.size());
    std::map<int, int> winners = resolve_conflicts(choices);

    for (const auto& [sink_id, uav_id] : winners) {
      auto wit = std::find_if(work.begin(), work.end(), [uav_id](const UavWork& w) {
        return w.uav.id == uav_id;
      });
      apply_move(net, *wit, proposals.at(uav_id), params);
      remaining.erase(sink_id);
    }
  }

  // deliveries
  result.unvisited = remaining;
  for (UavWork& w : work) {
    Plan plan;
    plan.uav_id = w.uav.id;
    plan.collection_path.push_back(NodeRef::base(w.uav.home_base));
    for (int sid : w.uav.visited) plan.collection_path.push_back(NodeRef::sink(sid));

    if (w.uav.visited.empty()) {
      plan.delivery_path = {NodeRef::base(w.uav.home_base)};
    } else {
      PathResult route = delivery_cost(net, w.uav.position);
      w.breakdown.delivery_energy = route.energy;
      for (std::size_t i = 1; i < route.nodes.size(); ++i) {
        const UavEdge* e = net.find_edge(route.nodes[i - 1], route.nodes[i]);
        assert(e != nullptr);
        w.uav.clock += e->length / w.uav.speed;
        w.legs.push_back({route.nodes[i - 1], route.nodes[i], e->energy, e->length,
                          w.uav.clock, LegPhase::Delivery});
      }
      plan.delivery_path = route.nodes;
    }

    w.breakdown.total = w.breakdown.launch_energy + w.breakdown.node_costs +
                        w.breakdown.travel_energy + w.breakdown.delivery_energy;
    plan.legs = std::move(w.legs);
    plan.arrivals = std::move(w.arrivals);
    plan.breakdown = w.breakdown;
    result.total_cost += plan.breakdown.total;
    result.plans.push_back(std::move(plan));
  }
  return result;
}

}  // namespace datamule
