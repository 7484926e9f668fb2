#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "datamule/errors.hpp"
#include "datamule/geometry.hpp"

namespace datamule {

// A sink aggregates one sensor cluster. UAVs collect from sinks only.
struct SinkNode {
  int id = 0;
  Point position;
  double revisit_deadline = 0.0;   // r: minutes after takeoff at which a visit is due
  double collection_energy = 0.0;  // e: energy to transfer the cluster's data
};

struct BaseStation {
  int id = 0;
  Point position;
  int capacity = 1;  // how many UAVs may be stationed here
};

enum class NodeKind : std::uint8_t { Sink = 0, Base = 1 };

// Reference to a node of the UAV move graph. Sinks and bases have
// independent id spaces; labels render as "7" for sinks and "B2" for bases.
struct NodeRef {
  NodeKind kind = NodeKind::Sink;
  int id = 0;

  static NodeRef sink(int id) { return NodeRef{NodeKind::Sink, id}; }
  static NodeRef base(int id) { return NodeRef{NodeKind::Base, id}; }
  bool is_sink() const { return kind == NodeKind::Sink; }
  bool is_base() const { return kind == NodeKind::Base; }

  auto operator<=>(const NodeRef&) const = default;

  std::string label() const;
  // Parses "7" / "B2" style labels; throws ParameterError on junk.
  static NodeRef parse(const std::string& text);
};

// Undirected traversable link. Energy is the cost a UAV pays to fly it in
// either direction; length (metres) only matters for travel time.
struct UavEdge {
  NodeRef a;
  NodeRef b;
  double energy = 0.0;
  double length = 0.0;
};

// Metadata carried through from richer inputs; never routed over.
struct SensorNode {
  int id = 0;
  Point position;
};

struct WirelessLink {
  int a = 0;
  int b = 0;
};

class Network {
 public:
  struct Neighbor {
    NodeRef node;
    double energy = 0.0;
    double length = 0.0;
  };

  // Strict additionally requires the sink subgraph to be connected and every
  // base to have at least one edge (when sinks exist). Generated and ingested
  // networks are always strict; hand-built test topologies may relax.
  enum class Validation { Strict, Relaxed };

  Network() = default;

  static Network build(std::vector<SinkNode> sinks,
                       std::vector<BaseStation> bases,
                       std::vector<UavEdge> edges,
                       Validation mode = Validation::Strict,
                       std::vector<SensorNode> sensors = {},
                       std::vector<WirelessLink> wireless = {});

  const std::vector<SinkNode>& sinks() const { return sinks_; }
  const std::vector<BaseStation>& bases() const { return bases_; }
  const std::vector<UavEdge>& uav_edges() const { return edges_; }
  const std::vector<SensorNode>& sensor_nodes() const { return sensors_; }
  const std::vector<WirelessLink>& wireless_links() const { return wireless_; }

  bool has_sink(int id) const;
  bool has_base(int id) const;
  bool has_node(NodeRef n) const;
  const SinkNode& sink(int id) const;       // ParameterError if unknown
  const BaseStation& base(int id) const;    // ParameterError if unknown
  Point position(NodeRef n) const;

  // Neighbors sorted by (kind, id); empty list for isolated nodes.
  const std::vector<Neighbor>& neighbors(NodeRef n) const;
  const UavEdge* find_edge(NodeRef a, NodeRef b) const;  // nullptr if absent

  // Stable dense index (sinks by ascending id, then bases); used for
  // deterministic priority ordering in path search.
  int node_order(NodeRef n) const;

 private:
  std::vector<SinkNode> sinks_;
  std::vector<BaseStation> bases_;
  std::vector<UavEdge> edges_;
  std::vector<SensorNode> sensors_;
  std::vector<WirelessLink> wireless_;
  std::map<NodeRef, std::vector<Neighbor>> adjacency_;
  std::map<NodeRef, int> order_;

  void index_and_validate(Validation mode);
};

struct PathResult {
  std::vector<NodeRef> nodes;  // endpoints included
  double energy = 0.0;
  double length = 0.0;
};

using NodeFilter = std::function<bool(const NodeRef&)>;

// One-to-many minimum-energy search. Targets are absorbing (a route never
// passes through one target on the way to another); intermediate nodes must
// satisfy can_transit. Result entries align with `targets`; unreachable
// targets come back empty.
std::vector<std::optional<PathResult>> shortest_paths(
    const Network& net, NodeRef from, std::span<const NodeRef> targets,
    const NodeFilter& can_transit);

// Minimum-energy route between two nodes, any intermediates allowed.
// Throws NoPathError when disconnected, ParameterError on unknown nodes.
PathResult shortest_uav_path(const Network& net, NodeRef from, NodeRef to);

// ---- construction ---------------------------------------------------------

struct RandomNetworkSpec {
  int n_sinks = 30;
  int n_bases = 5;
  double area_side = 1000.0;  // metres; nodes drawn uniformly in the square
  Interval deadline_range{0.0, 0.0};
  Interval energy_range{0.0, 0.0};
  int base_links = 3;             // each base connects to its k nearest sinks
  double energy_per_metre = 1.0;  // edge energy = length * this
};

// Deterministic: the same spec and seed always produce the same network,
// byte for byte once serialized. Sinks get ids 1..n, bases 1..m; the sink
// subgraph is complete; base capacity equals its link count.
Network generate_random_network(const RandomNetworkSpec& spec, std::uint64_t seed);

// Redraws sink deadlines and/or collection energies on an existing network
// (used to put experiment-controlled deadlines on ingested maps).
Network with_random_node_attributes(const Network& net,
                                    std::optional<Interval> deadline_range,
                                    std::optional<Interval> energy_range,
                                    std::uint64_t seed);

// ---- GPS ingestion --------------------------------------------------------

struct GpsIngestOptions {
  // Projection origin (lat, lon). Defaults to the centroid of all rows.
  std::optional<std::pair<double, double>> origin;
  int base_links = 3;
  double energy_per_metre = 1.0;
};

// Equirectangular projection about (lat0, lon0), Earth radius 6371 km.
Point project_equirectangular(double lat, double lon, double lat0, double lon0);

// Reads sinks from a "label,lat,lon" CSV and bases from a
// "label,lat,lon,capacity" CSV, projects to local metres, builds a complete
// sink subgraph and k-nearest base links. Throws IngestionError with the
// offending line number on malformed input.
Network ingest_gps_csv(const std::string& sinks_csv_path,
                       const std::string& bases_csv_path,
                       const GpsIngestOptions& options = {});

}  // namespace datamule
