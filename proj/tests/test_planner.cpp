#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "datamule/io.hpp"
#include "datamule/planner.hpp"

using namespace datamule;

namespace {

CostParams params(double a, double b, double g) {
  CostParams p;
  p.alpha = a;
  p.beta = b;
  p.gamma = g;
  return p;
}

Uav make_uav(int id, int base, double speed = 100.0) {
  Uav u;
  u.id = id;
  u.speed = speed;
  u.home_base = base;
  u.position = NodeRef::base(base);
  return u;
}

// B1 - s1 - s2 with a side spur s1 - s3; all sinks free to serve
//
//        B1 --1-- s1 --1-- s2
//                  \--2-- s3
Network star_net() {
  std::vector<SinkNode> sinks{
      {1, {100, 0}, 0, 0}, {2, {200, 0}, 0, 0}, {3, {100, 100}, 0, 0}};
  std::vector<BaseStation> bases{{1, {0, 0}, 1}};
  std::vector<UavEdge> edges{
      {NodeRef::base(1), NodeRef::sink(1), 1.0, 100.0},
      {NodeRef::sink(1), NodeRef::sink(2), 1.0, 100.0},
      {NodeRef::sink(1), NodeRef::sink(3), 2.0, 200.0},
  };
  return Network::build(std::move(sinks), std::move(bases), std::move(edges));
}

// independent recompute of a plan's cost from its legs and visit outcomes
double recompute_total(const Plan& p) {
  double launch = 0.0, travel = 0.0, delivery = 0.0, nodes = 0.0;
  for (std::size_t i = 0; i < p.legs.size(); ++i) {
    const PlanLeg& leg = p.legs[i];
    if (leg.phase == LegPhase::Delivery) {
      delivery += leg.energy;
    } else if (i == 0) {
      launch = leg.energy;
    } else {
      travel += leg.energy;
    }
  }
  for (const VisitOutcome& v : p.arrivals) nodes += v.node_cost;
  return launch + travel + delivery + nodes;
}

}  // namespace

TEST_CASE("threshold feasibility gates on the projected arrival") {
  SinkNode node{1, {0, 0}, 10.0, 2.0};
  CostParams p = params(0.5, 0.5, 1.0);
  p.wait_threshold = 0.3;
  p.late_threshold = 30.0;

  SUBCASE("free scenario accepts everything") {
    p.scenario = Scenario::Free;
    CHECK(feasible_under_thresholds(node, 0.0, p));
    CHECK(feasible_under_thresholds(node, 1e6, p));
  }
  SUBCASE("lateness beyond the cap is rejected") {
    p.scenario = Scenario::LateBounded;
    CHECK(feasible_under_thresholds(node, 40.0, p));   // 30 late, at the cap
    CHECK_FALSE(feasible_under_thresholds(node, 45.0, p));
  }
  SUBCASE("arrivals before the waiting gate are rejected") {
    p.scenario = Scenario::WaitBounded;
    CHECK(feasible_under_thresholds(node, 9.8, p));
    CHECK(feasible_under_thresholds(node, 0.3, p));
    CHECK_FALSE(feasible_under_thresholds(node, 0.2, p));
    // no late cap in this scenario
    CHECK(feasible_under_thresholds(node, 1e6, p));
  }
  SUBCASE("both bounds apply together") {
    p.scenario = Scenario::BothBounded;
    CHECK_FALSE(feasible_under_thresholds(node, 0.1, p));
    CHECK(feasible_under_thresholds(node, 15.0, p));
    CHECK_FALSE(feasible_under_thresholds(node, 41.0, p));
  }
  SUBCASE("per-node overrides take precedence") {
    p.scenario = Scenario::BothBounded;
    p.node_overrides[1] = {5.0, 100.0};
    CHECK_FALSE(feasible_under_thresholds(node, 4.0, p));
    CHECK(feasible_under_thresholds(node, 100.0, p));  // 90 late < 100
  }
}

TEST_CASE("next-move selection picks the cheapest adjacent remaining sink") {
  Network net = star_net();
  Uav u = make_uav(1, 1);
  CostParams p = params(0.0, 0.0, 1.0);

  SUBCASE("single neighbor") {
    auto pick = select_next(net, u, {1, 2, 3}, p);
    REQUIRE(pick.has_value());
    CHECK(pick->sink_id == 1);
    CHECK(pick->marginal_cost == doctest::Approx(1.0));
    CHECK(pick->arrival == doctest::Approx(1.0));
    REQUIRE(pick->hops.size() == 2);
    CHECK(pick->hops[0] == NodeRef::base(1));
    CHECK(pick->hops[1] == NodeRef::sink(1));
  }
  SUBCASE("cheapest of several") {
    u.position = NodeRef::sink(1);
    auto pick = select_next(net, u, {2, 3}, p);
    REQUIRE(pick.has_value());
    CHECK(pick->sink_id == 2);  // energy 1 beats energy 2
    CHECK(pick->marginal_cost == doctest::Approx(1.0));
  }
  SUBCASE("empty remaining set yields nothing") {
    CHECK_FALSE(select_next(net, u, {}, p).has_value());
  }
  SUBCASE("already handled neighbors are skipped") {
    CHECK_FALSE(select_next(net, u, {2, 3}, p).has_value());  // not adjacent
  }
  SUBCASE("ties break toward the lower sink id") {
    std::vector<SinkNode> sinks{{4, {1, 0}, 0, 0}, {9, {0, 1}, 0, 0}};
    std::vector<BaseStation> bases{{1, {0, 0}, 1}};
    std::vector<UavEdge> edges{
        {NodeRef::base(1), NodeRef::sink(4), 5.0, 100.0},
        {NodeRef::base(1), NodeRef::sink(9), 5.0, 100.0},
        {NodeRef::sink(4), NodeRef::sink(9), 7.0, 150.0},
    };
    Network tie = Network::build(sinks, bases, edges);
    auto pick = select_next(tie, u, {4, 9}, p);
    REQUIRE(pick.has_value());
    CHECK(pick->sink_id == 4);
  }
  SUBCASE("infeasible sinks are not proposed") {
    CostParams gated = p;
    gated.scenario = Scenario::WaitBounded;
    gated.wait_threshold = 50.0;  // nothing is reachable that late yet
    CHECK_FALSE(select_next(net, u, {1, 2, 3}, gated).has_value());
  }
  SUBCASE("nonpositive speed is rejected") {
    u.speed = 0.0;
    CHECK_THROWS_AS(select_next(net, u, {1}, p), ParameterError);
  }
}

TEST_CASE("conflict resolution awards contested sinks to the cheaper UAV") {
  SUBCASE("least marginal cost wins") {
    std::map<int, std::pair<int, double>> choices{
        {1, {7, 3.0}}, {2, {7, 4.2}}};
    auto winners = resolve_conflicts(choices);
    REQUIRE(winners.size() == 1);
    CHECK(winners.at(7) == 1);
  }
  SUBCASE("cost ties go to the lower UAV id") {
    std::map<int, std::pair<int, double>> choices{
        {5, {7, 3.0}}, {2, {7, 3.0}}, {9, {7, 3.0}}};
    auto winners = resolve_conflicts(choices);
    CHECK(winners.at(7) == 2);
  }
  SUBCASE("uncontested proposals all go through") {
    std::map<int, std::pair<int, double>> choices{
        {1, {4, 9.0}}, {2, {6, 1.0}}, {3, {5, 2.5}}};
    auto winners = resolve_conflicts(choices);
    REQUIRE(winners.size() == 3);
    CHECK(winners.at(4) == 1);
    CHECK(winners.at(6) == 2);
    CHECK(winners.at(5) == 3);
  }
  SUBCASE("empty input, empty output") {
    CHECK(resolve_conflicts({}).empty());
  }
}

TEST_CASE("cooperative round on the four-base pocket network") {
  Network net = load_network_file(std::string(DATAMULE_FIXTURES_DIR) +
                                  "/illustration.json");
  std::vector<Uav> fleet{make_uav(2, 2), make_uav(3, 3), make_uav(4, 4)};
  RoundResult round = plan_round(net, fleet, params(0.0, 0.0, 1.0));

  REQUIRE(round.plans.size() == 3);
  CHECK(round.unvisited.empty());
  CHECK(round.iterations == 2);
  CHECK(round.work_ops > 0);
  CHECK(round.total_cost == doctest::Approx(14.5));

  const Plan& u2 = round.plans[0];
  CHECK(u2.collection_path ==
        std::vector<NodeRef>{NodeRef::base(2), NodeRef::sink(4)});
  CHECK(u2.delivery_path ==
        std::vector<NodeRef>{NodeRef::sink(4), NodeRef::base(2)});
  CHECK(u2.breakdown.total == doctest::Approx(4.0));

  const Plan& u3 = round.plans[1];
  CHECK(u3.collection_path ==
        std::vector<NodeRef>{NodeRef::base(3), NodeRef::sink(1)});
  CHECK(u3.delivery_path ==
        std::vector<NodeRef>{NodeRef::sink(1), NodeRef::base(3)});
  CHECK(u3.breakdown.total == doctest::Approx(5.0));

  const Plan& u4 = round.plans[2];
  CHECK(u4.collection_path ==
        std::vector<NodeRef>{NodeRef::base(4), NodeRef::sink(3),
                             NodeRef::sink(5)});
  CHECK(u4.delivery_path ==
        std::vector<NodeRef>{NodeRef::sink(5), NodeRef::base(1)});
  CHECK(u4.breakdown.total == doctest::Approx(5.5));
}

TEST_CASE("a single UAV sweeps a chain nearest-first") {
  std::vector<SinkNode> sinks{{1, {100, 0}, 0, 0}, {2, {200, 0}, 0, 0},
                              {3, {300, 0}, 0, 0}, {4, {400, 0}, 0, 0}};
  std::vector<BaseStation> bases{{1, {0, 0}, 1}};
  std::vector<UavEdge> edges{
      {NodeRef::base(1), NodeRef::sink(1), 1.0, 100.0},
      {NodeRef::sink(1), NodeRef::sink(2), 1.0, 100.0},
      {NodeRef::sink(2), NodeRef::sink(3), 1.0, 100.0},
      {NodeRef::sink(3), NodeRef::sink(4), 1.0, 100.0},
  };
  Network net = Network::build(sinks, bases, edges);
  std::vector<Uav> fleet{make_uav(1, 1)};
  RoundResult round = plan_round(net, fleet, params(0.0, 0.0, 1.0));

  REQUIRE(round.plans.size() == 1);
  CHECK(round.plans[0].collection_path ==
        std::vector<NodeRef>{NodeRef::base(1), NodeRef::sink(1),
                             NodeRef::sink(2), NodeRef::sink(3),
                             NodeRef::sink(4)});
  // walk out 4 hops, deliver back over the same 4
  CHECK(round.total_cost == doctest::Approx(8.0));
  CHECK(round.iterations == 4);
  CHECK(round.plans[0].delivery_path.size() == 5);
}

TEST_CASE("exhausted neighborhoods fall back to transit hops") {
  Network net = star_net();
  std::vector<Uav> fleet{make_uav(1, 1)};
  RoundResult round = plan_round(net, fleet, params(0.0, 0.0, 1.0));

  REQUIRE(round.plans.size() == 1);
  const Plan& p = round.plans[0];
  // s3 is only reachable back through s1, which is already collected
  CHECK(p.collection_path ==
        std::vector<NodeRef>{NodeRef::base(1), NodeRef::sink(1),
                             NodeRef::sink(2), NodeRef::sink(3)});
  REQUIRE(p.legs.size() == 6);
  CHECK(p.legs[0].phase == LegPhase::Collection);  // B1 -> s1
  CHECK(p.legs[1].phase == LegPhase::Collection);  // s1 -> s2
  CHECK(p.legs[2].phase == LegPhase::Transit);     // s2 -> s1 (ride through)
  CHECK(p.legs[2].to == NodeRef::sink(1));
  CHECK(p.legs[3].phase == LegPhase::Collection);  // s1 -> s3
  CHECK(p.legs[4].phase == LegPhase::Delivery);
  CHECK(p.legs[5].phase == LegPhase::Delivery);
  // one visit outcome per collected sink, none for the transit stop
  CHECK(p.arrivals.size() == 3);
  // 1 launch + 1 + (1+2) collection/transit + (2+1) delivery
  CHECK(round.total_cost == doctest::Approx(8.0));
  CHECK(p.breakdown.travel_energy == doctest::Approx(4.0));
  CHECK(p.breakdown.delivery_energy == doctest::Approx(3.0));
}

TEST_CASE("losing every conflict leaves a UAV at home") {
  std::vector<SinkNode> sinks{{1, {10, 0}, 0, 0}};
  std::vector<BaseStation> bases{{1, {0, 0}, 1}, {2, {50, 0}, 1}};
  std::vector<UavEdge> edges{
      {NodeRef::base(1), NodeRef::sink(1), 1.0, 10.0},
      {NodeRef::base(2), NodeRef::sink(1), 5.0, 40.0},
  };
  Network net = Network::build(sinks, bases, edges);
  std::vector<Uav> fleet{make_uav(1, 1), make_uav(2, 2)};
  RoundResult round = plan_round(net, fleet, params(0.0, 0.0, 1.0));

  REQUIRE(round.plans.size() == 2);
  CHECK(round.plans[0].collection_path.size() == 2);
  CHECK(round.plans[1].collection_path ==
        std::vector<NodeRef>{NodeRef::base(2)});
  CHECK(round.plans[1].delivery_path ==
        std::vector<NodeRef>{NodeRef::base(2)});
  CHECK(round.plans[1].breakdown.total == 0.0);
  CHECK(round.plans[1].legs.empty());
  CHECK(round.total_cost == doctest::Approx(2.0));
}

TEST_CASE("fleet configuration errors are rejected up front") {
  Network net = star_net();  // base 1 has capacity 1

  SUBCASE("empty fleet") {
    CHECK_THROWS_AS(plan_round(net, {}, params(0, 0, 1)), ConfigurationError);
  }
  SUBCASE("duplicate UAV ids") {
    std::vector<Uav> fleet{make_uav(3, 1), make_uav(3, 1)};
    CHECK_THROWS_AS(plan_round(net, fleet, params(0, 0, 1)),
                    ConfigurationError);
  }
  SUBCASE("unknown home base") {
    std::vector<Uav> fleet{make_uav(1, 42)};
    CHECK_THROWS_AS(plan_round(net, fleet, params(0, 0, 1)),
                    ConfigurationError);
  }
  SUBCASE("nonpositive speed") {
    std::vector<Uav> fleet{make_uav(1, 1, 0.0)};
    CHECK_THROWS_AS(plan_round(net, fleet, params(0, 0, 1)),
                    ConfigurationError);
    fleet[0].speed = -3.0;
    CHECK_THROWS_AS(plan_round(net, fleet, params(0, 0, 1)),
                    ConfigurationError);
  }
  SUBCASE("base capacity is enforced on the first round") {
    std::vector<Uav> fleet{make_uav(1, 1), make_uav(2, 1)};
    CHECK_THROWS_AS(plan_round(net, fleet, params(0, 0, 1)),
                    ConfigurationError);
    PlanOptions relaxed;
    relaxed.enforce_capacity = false;
    CHECK_NOTHROW(plan_round(net, fleet, params(0, 0, 1), relaxed));
  }
  SUBCASE("a base with no edges cannot launch") {
    std::vector<SinkNode> sinks{{1, {10, 0}, 0, 0}};
    std::vector<BaseStation> bases{{1, {0, 0}, 1}, {2, {99, 0}, 1}};
    std::vector<UavEdge> edges{{NodeRef::base(1), NodeRef::sink(1), 1.0, 10.0}};
    Network cut = Network::build(sinks, bases, edges,
                                 Network::Validation::Relaxed);
    std::vector<Uav> fleet{make_uav(1, 2)};
    CHECK_THROWS_AS(plan_round(cut, fleet, params(0, 0, 1)),
                    ConfigurationError);
  }
  SUBCASE("invalid weights are rejected") {
    std::vector<Uav> fleet{make_uav(1, 1)};
    CHECK_THROWS_AS(plan_round(net, fleet, params(-1, 0, 1)), ParameterError);
  }
}

TEST_CASE("random fleets partition the sinks and cover everything") {
  for (unsigned long seed : {21UL, 22UL, 23UL, 24UL}) {
    CAPTURE(seed);
    RandomNetworkSpec spec;
    spec.n_sinks = 12;
    spec.n_bases = 3;
    Network net = generate_random_network(spec, seed);
    std::vector<Uav> fleet{make_uav(1, 1, 400), make_uav(2, 2, 500),
                           make_uav(3, 3, 600)};
    RoundResult round = plan_round(net, fleet, params(0.5, 0.5, 1.0));

    CHECK(round.unvisited.empty());
    CHECK(round.iterations <= 12 + 3);

    std::set<int> seen;
    std::size_t visits = 0;
    for (const Plan& p : round.plans) {
      for (std::size_t i = 1; i < p.collection_path.size(); ++i) {
        CHECK(seen.insert(p.collection_path[i].id).second);  // disjoint
        ++visits;
      }
      CHECK(recompute_total(p) == doctest::Approx(p.breakdown.total).epsilon(1e-9));
      if (p.collection_path.size() > 1) {
        CHECK(p.delivery_path.back().is_base());
      }
    }
    CHECK(visits == 12);  // full coverage

    double z = 0.0;
    for (const Plan& p : round.plans) z += p.breakdown.total;
    CHECK(z == doctest::Approx(round.total_cost).epsilon(1e-9));
  }
}

TEST_CASE("planning twice gives byte-identical results") {
  RandomNetworkSpec spec;
  spec.n_sinks = 15;
  spec.n_bases = 4;
  Network net = generate_random_network(spec, 99);
  std::vector<Uav> fleet{make_uav(1, 1, 350), make_uav(2, 3, 450)};
  CostParams p = params(0.4, 0.7, 1.2);

  RoundResult a = plan_round(net, fleet, p);
  RoundResult b = plan_round(net, fleet, p);
  CHECK(a.total_cost == b.total_cost);
  CHECK(a.iterations == b.iterations);
  CHECK(a.work_ops == b.work_ops);
  REQUIRE(a.plans.size() == b.plans.size());
  for (std::size_t i = 0; i < a.plans.size(); ++i) {
    CHECK(a.plans[i].collection_path == b.plans[i].collection_path);
    CHECK(a.plans[i].delivery_path == b.plans[i].delivery_path);
  }
}

TEST_CASE("planning does not mutate the caller's fleet") {
  Network net = star_net();
  std::vector<Uav> fleet{make_uav(1, 1)};
  fleet[0].energy_spent = 123.0;
  plan_round(net, fleet, params(0, 0, 1));
  CHECK(fleet[0].clock == 0.0);
  CHECK(fleet[0].visited.empty());
  CHECK(fleet[0].energy_spent == 123.0);
  CHECK(fleet[0].position == NodeRef::base(1));
}

TEST_CASE("bounded scenarios leave unreachable sinks unvisited") {
  SUBCASE("a distant sink misses its lateness cap") {
    std::vector<SinkNode> sinks{{1, {100, 0}, 0, 0}, {2, {10100, 0}, 0, 0}};
    std::vector<BaseStation> bases{{1, {0, 0}, 1}};
    std::vector<UavEdge> edges{
        {NodeRef::base(1), NodeRef::sink(1), 1.0, 100.0},
        {NodeRef::sink(1), NodeRef::sink(2), 10.0, 10000.0},
    };
    Network net = Network::build(sinks, bases, edges);
    std::vector<Uav> fleet{make_uav(1, 1)};  // speed 100: sink 2 is 101 min out
    CostParams p = params(0.5, 0.5, 1.0);
    p.scenario = Scenario::LateBounded;
    p.late_threshold = 30.0;
    RoundResult round = plan_round(net, fleet, p);

    CHECK(round.unvisited == std::set<int>{2});
    CHECK(round.plans[0].collection_path ==
          std::vector<NodeRef>{NodeRef::base(1), NodeRef::sink(1)});
    CHECK(round.plans[0].delivery_path.back() == NodeRef::base(1));
  }
  SUBCASE("a waiting gate nobody reaches leaves everything unvisited") {
    Network net = star_net();
    std::vector<Uav> fleet{make_uav(1, 1)};
    CostParams p = params(0.5, 0.5, 1.0);
    p.scenario = Scenario::WaitBounded;
    p.wait_threshold = 1e5;
    RoundResult round = plan_round(net, fleet, p);

    CHECK(round.unvisited == std::set<int>{1, 2, 3});
    CHECK(round.total_cost == 0.0);
    CHECK(round.plans[0].collection_path ==
          std::vector<NodeRef>{NodeRef::base(1)});
  }
}

TEST_CASE("a network without sinks plans an empty round") {
  std::vector<BaseStation> bases{{1, {0, 0}, 2}};
  Network net = Network::build({}, bases, {});
  std::vector<Uav> fleet{make_uav(1, 1)};
  RoundResult round = plan_round(net, fleet, params(0.5, 0.5, 1.0));
  CHECK(round.total_cost == 0.0);
  CHECK(round.iterations == 0);
  CHECK(round.unvisited.empty());
  CHECK(round.plans[0].collection_path ==
        std::vector<NodeRef>{NodeRef::base(1)});
}
