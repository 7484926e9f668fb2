#include "datamule/oracle.hpp"

#include <algorithm>

namespace datamule {

namespace {

struct UavTrack {
  const Uav* uav = nullptr;
  NodeRef position;
  double clock = 0.0;
  double cost = 0.0;  // launch + visit costs + travel so far
};

struct Enumerator {
  const Network& net;
  const CostParams& params;
  const std::vector<const Uav*>& fleet;  // ascending id
  std::map<int, double> delivery_energy;  // last sink -> cheapest base route

  std::set<int> remaining;
  std::vector<std::vector<int>> assignment;  // per fleet slot
  std::vector<UavTrack> tracks;

  long long explored = 0;
  bool have_best = false;
  std::size_t best_covered = 0;
  double best_cost = 0.0;
  std::vector<std::vector<int>> best_assignment;

  void finish_configuration() {
    ++explored;
    double total = 0.0;
    for (const UavTrack& t : tracks) {
      if (t.position.is_base()) continue;  // stayed home, contributes nothing
      total += t.cost + delivery_energy.at(t.position.id);
    }
    const std::size_t covered = net.sinks().size() - remaining.size();
    if (!have_best || covered > best_covered ||
        (covered == best_covered &&
         (total < best_cost ||
          (total == best_cost && assignment < best_assignment)))) {
      have_best = true;
      best_covered = covered;
      best_cost = total;
      best_assignment = assignment;
    }
  }

  // Extend UAV `slot` with one more sink, or seal its route and move on.
  void extend(std::size_t slot) {
    if (slot == fleet.size()) {
      finish_configuration();
      return;
    }
    extend(slot + 1);  // stop collecting with this UAV

    UavTrack& t = tracks[slot];
    const UavTrack saved = t;
    // candidates must be adjacent, unassigned and feasible on arrival
    const auto neighbors = net.neighbors(t.position);
    for (const Network::Neighbor& nb : neighbors) {
      if (!nb.node.is_sink() || !remaining.count(nb.node.id)) continue;
      const SinkNode& node = net.sink(nb.node.id);
      const double arrival = t.clock + nb.length / t.uav->speed;
      if (!feasible_under_thresholds(node, arrival, params)) continue;
      VisitOutcome visit = visit_cost(node, arrival, params);

      t.cost += nb.energy + visit.node_cost;
      t.clock = arrival + (params.wait_advances_clock ? visit.wait : 0.0);
      t.position = nb.node;
      assignment[slot].push_back(node.id);
      remaining.erase(node.id);

      extend(slot);  // keep growing the same route

      remaining.insert(node.id);
      assignment[slot].pop_back();
      t = saved;
    }
  }
};

}  // namespace

ExactSolution solve_exact(const Network& net, const std::vector<Uav>& fleet,
                          const CostParams& params, const OracleLimits& limits) {
  if (static_cast<int>(net.sinks().size()) > limits.max_sinks) {
    throw RefusalError("exact solver refuses " + std::to_string(net.sinks().size()) +
                       " sinks (limit " + std::to_string(limits.max_sinks) + ")");
  }
  if (static_cast<int>(fleet.size()) > limits.max_fleet) {
    throw RefusalError("exact solver refuses " + std::to_string(fleet.size()) +
                       " UAVs (limit " + std::to_string(limits.max_fleet) + ")");
  }
  if (fleet.empty()) throw ConfigurationError("fleet is empty");
  validate(params);
  for (const Uav& u : fleet) {
    if (u.speed <= 0) {
      throw ConfigurationError("UAV " + std::to_string(u.id) + " speed must be positive");
    }
    if (!net.has_base(u.home_base)) {
      throw ConfigurationError("UAV " + std::to_string(u.id) +
                               " references unknown base B" + std::to_string(u.home_base));
    }
  }

  std::vector<const Uav*> ordered;
  for (const Uav& u : fleet) ordered.push_back(&u);
  std::sort(ordered.begin(), ordered.end(),
            [](const Uav* a, const Uav* b) { return a->id < b->id; });

  Enumerator en{net, params, ordered, {}, {}, {}, {}, 0, false, 0, 0.0, {}};
  for (const SinkNode& s : net.sinks()) {
    en.remaining.insert(s.id);
    en.delivery_energy[s.id] = delivery_cost(net, NodeRef::sink(s.id)).energy;
  }
  en.assignment.assign(ordered.size(), {});
  en.tracks.resize(ordered.size());
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    en.tracks[i].uav = ordered[i];
    en.tracks[i].position = NodeRef::base(ordered[i]->home_base);
  }

  en.extend(0);

  ExactSolution out;
  out.explored = en.explored;
  out.total_cost = en.best_cost;
  std::set<int> covered;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    out.assignments[ordered[i]->id] = en.best_assignment[i];
    covered.insert(en.best_assignment[i].begin(), en.best_assignment[i].end());
  }
  for (const SinkNode& s : net.sinks()) {
    if (!covered.count(s.id)) out.unvisited.insert(s.id);
  }
  return out;
}

}  // namespace datamule
