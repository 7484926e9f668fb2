#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include "datamule/io.hpp"
#include "datamule/network.hpp"

using namespace datamule;

namespace {

Network triangle_net() {
  // A - B - C with a direct A-C shortcut that is more expensive than the detour
  std::vector<SinkNode> sinks{{1, {0, 0}, 0, 0}, {2, {1, 0}, 0, 0}, {3, {2, 0}, 0, 0}};
  std::vector<BaseStation> bases{{1, {-1, 0}, 1}};
  std::vector<UavEdge> edges{
      {NodeRef::sink(1), NodeRef::sink(2), 1.0, 1.0},
      {NodeRef::sink(2), NodeRef::sink(3), 1.0, 1.0},
      {NodeRef::sink(1), NodeRef::sink(3), 3.0, 3.0},
      {NodeRef::base(1), NodeRef::sink(1), 1.0, 1.0},
  };
  return Network::build(std::move(sinks), std::move(bases), std::move(edges));
}

}  // namespace

TEST_CASE("node labels render and parse") {
  CHECK(NodeRef::sink(7).label() == "7");
  CHECK(NodeRef::base(2).label() == "B2");
  CHECK(NodeRef::parse("7") == NodeRef::sink(7));
  CHECK(NodeRef::parse("B2") == NodeRef::base(2));
  CHECK_THROWS_AS(NodeRef::parse("x9"), ParameterError);
  CHECK_THROWS_AS(NodeRef::parse(""), ParameterError);
  CHECK_THROWS_AS(NodeRef::parse("B"), ParameterError);
}

TEST_CASE("construction validates the graph") {
  std::vector<SinkNode> sinks{{1, {0, 0}, 0, 0}, {2, {1, 0}, 0, 0}};
  std::vector<BaseStation> bases{{1, {2, 2}, 1}};
  std::vector<UavEdge> ok{
      {NodeRef::sink(1), NodeRef::sink(2), 1.0, 1.0},
      {NodeRef::base(1), NodeRef::sink(1), 1.0, 1.0},
  };

  SUBCASE("valid network builds") {
    CHECK_NOTHROW(Network::build(sinks, bases, ok));
  }
  SUBCASE("duplicate sink ids rejected") {
    auto dup = sinks;
    dup.push_back({1, {5, 5}, 0, 0});
    CHECK_THROWS_AS(Network::build(dup, bases, ok), ParameterError);
  }
  SUBCASE("base-base edges rejected") {
    auto bb = bases;
    bb.push_back({2, {3, 3}, 1});
    auto edges = ok;
    edges.push_back({NodeRef::base(1), NodeRef::base(2), 1.0, 1.0});
    CHECK_THROWS_AS(Network::build(sinks, bb, edges), ParameterError);
  }
  SUBCASE("edges to unknown nodes rejected") {
    auto edges = ok;
    edges.push_back({NodeRef::sink(1), NodeRef::sink(9), 1.0, 1.0});
    CHECK_THROWS_AS(Network::build(sinks, bases, edges), ParameterError);
  }
  SUBCASE("self loops rejected") {
    auto edges = ok;
    edges.push_back({NodeRef::sink(1), NodeRef::sink(1), 1.0, 1.0});
    CHECK_THROWS_AS(Network::build(sinks, bases, edges), ParameterError);
  }
  SUBCASE("negative edge energy rejected") {
    auto edges = ok;
    edges[0].energy = -1.0;
    CHECK_THROWS_AS(Network::build(sinks, bases, edges), ParameterError);
  }
  SUBCASE("disconnected sink subgraph rejected when strict") {
    std::vector<UavEdge> sparse{{NodeRef::base(1), NodeRef::sink(1), 1.0, 1.0}};
    CHECK_THROWS_AS(Network::build(sinks, bases, sparse), ParameterError);
    CHECK_NOTHROW(
        Network::build(sinks, bases, sparse, Network::Validation::Relaxed));
  }
  SUBCASE("base without edges rejected when strict") {
    auto bb = bases;
    bb.push_back({2, {9, 9}, 1});
    CHECK_THROWS_AS(Network::build(sinks, bb, ok), ParameterError);
  }
}

TEST_CASE("accessors and adjacency") {
  Network net = triangle_net();
  CHECK(net.has_sink(2));
  CHECK_FALSE(net.has_sink(9));
  CHECK(net.has_base(1));
  CHECK_THROWS_AS(net.sink(9), ParameterError);

  const auto& nb = net.neighbors(NodeRef::sink(1));
  REQUIRE(nb.size() == 3);
  // sorted by (kind, id): sinks first
  CHECK(nb[0].node == NodeRef::sink(2));
  CHECK(nb[1].node == NodeRef::sink(3));
  CHECK(nb[2].node == NodeRef::base(1));

  const UavEdge* e = net.find_edge(NodeRef::sink(3), NodeRef::sink(1));
  REQUIRE(e != nullptr);
  CHECK(e->energy == 3.0);
  CHECK(net.find_edge(NodeRef::sink(3), NodeRef::base(1)) == nullptr);
}

TEST_CASE("minimum-energy path prefers the cheap detour") {
  Network net = triangle_net();
  PathResult p = shortest_uav_path(net, NodeRef::sink(1), NodeRef::sink(3));
  REQUIRE(p.nodes.size() == 3);
  CHECK(p.nodes[1] == NodeRef::sink(2));
  CHECK(p.energy == doctest::Approx(2.0));

  SUBCASE("identity path") {
    PathResult id = shortest_uav_path(net, NodeRef::sink(2), NodeRef::sink(2));
    CHECK(id.nodes.size() == 1);
    CHECK(id.energy == 0.0);
  }
  SUBCASE("unknown node") {
    CHECK_THROWS_AS(shortest_uav_path(net, NodeRef::sink(1), NodeRef::sink(9)),
                    ParameterError);
  }
  SUBCASE("disconnected pair") {
    std::vector<SinkNode> sinks{{1, {0, 0}, 0, 0}, {2, {1, 0}, 0, 0}};
    std::vector<BaseStation> bases{{1, {2, 2}, 1}};
    std::vector<UavEdge> edges{{NodeRef::base(1), NodeRef::sink(1), 1.0, 1.0}};
    Network sparse = Network::build(sinks, bases, edges,
                                    Network::Validation::Relaxed);
    CHECK_THROWS_AS(shortest_uav_path(sparse, NodeRef::sink(1), NodeRef::sink(2)),
                    NoPathError);
  }
}

TEST_CASE("generated networks have the advertised shape") {
  RandomNetworkSpec spec;
  spec.n_sinks = 30;
  spec.n_bases = 5;
  spec.area_side = 1000.0;
  spec.deadline_range = {0.0, 30.0};
  spec.energy_range = {1.0, 5.0};
  spec.base_links = 3;
  Network net = generate_random_network(spec, 7);

  CHECK(net.sinks().size() == 30);
  CHECK(net.bases().size() == 5);
  int sink_sink = 0, base_sink = 0;
  for (const UavEdge& e : net.uav_edges()) {
    if (e.a.is_sink() && e.b.is_sink()) ++sink_sink;
    else ++base_sink;
  }
  CHECK(sink_sink == 435);  // complete graph on 30 sinks
  CHECK(base_sink == 15);

  SUBCASE("node attributes inside the requested ranges") {
    for (const SinkNode& s : net.sinks()) {
      CHECK(s.position.x >= 0.0);
      CHECK(s.position.x <= 1000.0);
      CHECK(s.revisit_deadline >= 0.0);
      CHECK(s.revisit_deadline <= 30.0);
      CHECK(s.collection_energy >= 1.0);
      CHECK(s.collection_energy <= 5.0);
    }
  }
  SUBCASE("base capacity matches its link count") {
    for (const BaseStation& b : net.bases()) {
      CHECK(b.capacity == 3);
      CHECK(net.neighbors(NodeRef::base(b.id)).size() == 3);
    }
  }
  SUBCASE("edge energy scales with length") {
    for (const UavEdge& e : net.uav_edges()) {
      CHECK(e.energy == doctest::Approx(e.length));
    }
  }
  SUBCASE("same seed reproduces the network byte for byte") {
    Network again = generate_random_network(spec, 7);
    CHECK(network_to_json(net).dump() == network_to_json(again).dump());
    Network other = generate_random_network(spec, 8);
    CHECK(network_to_json(net).dump() != network_to_json(other).dump());
  }
}

TEST_CASE("minimal generated network") {
  RandomNetworkSpec spec;
  spec.n_sinks = 1;
  spec.n_bases = 1;
  spec.base_links = 3;  // clamped to the single available sink
  Network net = generate_random_network(spec, 1);
  CHECK(net.sinks().size() == 1);
  CHECK(net.bases().size() == 1);
  CHECK(net.uav_edges().size() == 1);
  CHECK(net.uav_edges()[0].a.is_sink());
  CHECK(net.uav_edges()[0].b.is_base());

  RandomNetworkSpec bad;
  bad.n_sinks = 0;
  CHECK_THROWS_AS(generate_random_network(bad, 1), ParameterError);
}

TEST_CASE("path energy recomputes from the edge table") {
  RandomNetworkSpec spec;
  spec.n_sinks = 12;
  spec.n_bases = 3;
  spec.deadline_range = {0.0, 10.0};
  spec.energy_range = {0.0, 2.0};
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    Network net = generate_random_network(spec, seed);
    PathResult p = shortest_uav_path(net, NodeRef::base(1), NodeRef::sink(12));
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
      const UavEdge* e = net.find_edge(p.nodes[i], p.nodes[i + 1]);
      REQUIRE(e != nullptr);
      sum += e->energy;
    }
    CHECK(p.energy == doctest::Approx(sum).epsilon(1e-12));

    // never worse than any direct edge
    const UavEdge* direct = net.find_edge(NodeRef::base(1), NodeRef::sink(12));
    if (direct != nullptr) CHECK(p.energy <= direct->energy + 1e-12);
  }
}

TEST_CASE("equirectangular projection at city scale") {
  // 0.01 degrees of latitude is about 1.112 km on Earth
  Point p = project_equirectangular(0.01, 0.0, 0.0, 0.0);
  CHECK(std::abs(p.y - 1111.95) < 0.5);
  CHECK(p.x == doctest::Approx(0.0));

  // longitude shrinks with cos(latitude)
  Point q = project_equirectangular(-34.0, 18.51, -34.0, 18.50);
  CHECK(std::abs(q.x) < 1111.95);
  CHECK(std::abs(q.x - 1111.95 * std::cos(-34.0 * std::acos(-1.0) / 180.0)) < 1.0);
}

TEST_CASE("GPS ingestion builds the station network") {
  const std::string dir = DATAMULE_FIXTURES_DIR;
  Network net = ingest_gps_csv(dir + "/cape_town_stations.csv",
                               dir + "/cape_town_bases.csv");
  CHECK(net.sinks().size() == 49);
  CHECK(net.bases().size() == 5);
  for (int id = 1; id <= 49; ++id) CHECK(net.has_sink(id));

  int sink_sink = 0;
  for (const UavEdge& e : net.uav_edges()) {
    if (e.a.is_sink() && e.b.is_sink()) ++sink_sink;
  }
  CHECK(sink_sink == 49 * 48 / 2);
}

TEST_CASE("GPS ingestion rejects malformed input") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "datamule_gps_test";
  fs::create_directories(dir);
  auto write = [&](const char* name, const char* body) {
    std::ofstream((dir / name).string()) << body;
    return (dir / name).string();
  };
  const std::string bases = write("b.csv", "label,lat,lon,capacity\n1,0,0,2\n");

  SUBCASE("malformed row reports its line number") {
    const std::string sinks = write("s1.csv", "label,lat,lon\n1,0,0\n2,zzz,0\n");
    try {
      ingest_gps_csv(sinks, bases);
      FAIL("expected ingestion error");
    } catch (const IngestionError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("duplicate labels rejected") {
    const std::string sinks = write("s2.csv", "label,lat,lon\n1,0,0\n1,0.1,0\n");
    CHECK_THROWS_AS(ingest_gps_csv(sinks, bases), IngestionError);
  }
  SUBCASE("no base stations rejected") {
    const std::string sinks = write("s3.csv", "label,lat,lon\n1,0,0\n");
    const std::string nobase = write("b0.csv", "label,lat,lon,capacity\n");
    CHECK_THROWS_AS(ingest_gps_csv(sinks, nobase), IngestionError);
  }
  fs::remove_all(dir);
}

TEST_CASE("attribute redraw keeps geometry, replaces timing") {
  RandomNetworkSpec spec;
  spec.n_sinks = 6;
  spec.n_bases = 2;
  Network net = generate_random_network(spec, 3);
  Network redrawn =
      with_random_node_attributes(net, Interval{5.0, 9.0}, Interval{1.0, 2.0}, 99);

  REQUIRE(redrawn.sinks().size() == net.sinks().size());
  CHECK(redrawn.uav_edges().size() == net.uav_edges().size());
  for (std::size_t i = 0; i < net.sinks().size(); ++i) {
    CHECK(redrawn.sinks()[i].position.x == net.sinks()[i].position.x);
    CHECK(redrawn.sinks()[i].revisit_deadline >= 5.0);
    CHECK(redrawn.sinks()[i].revisit_deadline <= 9.0);
    CHECK(redrawn.sinks()[i].collection_energy >= 1.0);
    CHECK(redrawn.sinks()[i].collection_energy <= 2.0);
  }
}

TEST_CASE("network files round-trip") {
  const std::string dir = DATAMULE_FIXTURES_DIR;
  Network net = load_network_file(dir + "/illustration.json");
  CHECK(net.sinks().size() == 4);
  CHECK(net.bases().size() == 4);

  const std::string once = network_to_json(net).dump(2);
  Network back = network_from_json(network_to_json(net));
  CHECK(network_to_json(back).dump(2) == once);
}
