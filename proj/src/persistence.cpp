#include "datamule/persistence.hpp"

#include <algorithm>
#include <sstream>

namespace datamule {

std::string canonical_signature(const RoundResult& round) {
  std::vector<const Plan*> ordered;
  ordered.reserve(round.plans.size());
  for (const Plan& p : round.plans) ordered.push_back(&p);
  std::sort(ordered.begin(), ordered.end(),
            [](const Plan* a, const Plan* b) { return a->uav_id < b->uav_id; });
  std::ostringstream sig;
  for (const Plan* p : ordered) {
    sig << 'u' << p->uav_id << ':';
    for (const NodeRef& n : p->collection_path) sig << n.label() << '>';
    sig << '/';
    for (const NodeRef& n : p->delivery_path) sig << n.label() << '>';
    sig << '|';
  }
  return sig.str();
}

std::optional<PeriodInfo> detect_period(std::span<const std::string> signatures) {
  const int n = static_cast<int>(signatures.size());
  if (n < 2) return std::nullopt;
  for (int start = 0; start + 1 < n; ++start) {
    for (int length = 1; start + length < n; ++length) {
      bool ok = true;
      for (int k = start; k + length < n; ++k) {
        if (signatures[k] != signatures[k + length]) {
          ok = false;
          break;
        }
      }
      if (ok) return PeriodInfo{start, length};
    }
  }
  return std::nullopt;
}

std::optional<PeriodInfo> detect_period(const std::vector<RoundResult>& rounds) {
  std::vector<std::string> sigs;
  sigs.reserve(rounds.size());
  for (const RoundResult& r : rounds) sigs.push_back(canonical_signature(r));
  return detect_period(sigs);
}

std::vector<Uav> relocate_fleet(const std::vector<Uav>& fleet,
                                const RoundResult& round) {
  std::vector<Uav> next = fleet;
  for (Uav& u : next) {
    auto it = std::find_if(round.plans.begin(), round.plans.end(),
                           [&u](const Plan& p) { return p.uav_id == u.id; });
    if (it == round.plans.end()) continue;
    const Plan& plan = *it;
    if (!plan.delivery_path.empty() && plan.delivery_path.back().is_base()) {
      u.home_base = plan.delivery_path.back().id;
    }
    u.clock = 0.0;
    u.position = NodeRef::base(u.home_base);
    u.visited.clear();
    u.energy_spent += plan.breakdown.total;
  }
  return next;
}

PersistentRun run_persistent(const Network& net, std::vector<Uav> fleet,
                             const CostParams& params,
                             const PersistentConfig& config) {
  if (config.max_rounds < 1) {
    throw ConfigurationError("max_rounds must be >= 1");
  }
  PersistentRun run;
  for (int round_index = 0; round_index < config.max_rounds; ++round_index) {
    PlanOptions opts;
    opts.enforce_capacity =
        config.enforce_initial_capacity && round_index == 0;

    std::vector<int> bases;
    bases.reserve(fleet.size());
    for (const Uav& u : fleet) bases.push_back(u.home_base);
    run.start_bases.push_back(std::move(bases));

    RoundResult round = plan_round(net, fleet, params, opts);
    run.signatures.push_back(canonical_signature(round));
    fleet = relocate_fleet(fleet, round);
    run.rounds.push_back(std::move(round));

    if (config.stop_on_period) {
      run.period = detect_period(run.signatures);
      if (run.period) break;
    }
  }
  if (!run.period) run.period = detect_period(run.signatures);
  run.final_fleet = std::move(fleet);
  return run;
}

}  // namespace datamule
