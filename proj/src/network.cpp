#include "datamule/network.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace datamule {

std::string NodeRef::label() const {
  return is_base() ? "B" + std::to_string(id) : std::to_string(id);
}

NodeRef NodeRef::parse(const std::string& text) {
  std::string digits = text;
  NodeKind kind = NodeKind::Sink;
  if (!digits.empty() && (digits[0] == 'B' || digits[0] == 'b')) {
    kind = NodeKind::Base;
    digits = digits.substr(1);
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw ParameterError("bad node label '" + text + "'");
  }
  return NodeRef{kind, std::stoi(digits)};
}

Network Network::build(std::vector<SinkNode> sinks, std::vector<BaseStation> bases,
                       std::vector<UavEdge> edges, Validation mode,
                       std::vector<SensorNode> sensors,
                       std::vector<WirelessLink> wireless) {
  Network net;
  net.sinks_ = std::move(sinks);
  net.bases_ = std::move(bases);
  net.edges_ = std::move(edges);
  net.sensors_ = std::move(sensors);
  net.wireless_ = std::move(wireless);
  net.index_and_validate(mode);
  return net;
}

void Network::index_and_validate(Validation mode) {
  std::sort(sinks_.begin(), sinks_.end(),
            [](const SinkNode& a, const SinkNode& b) { return a.id < b.id; });
  std::sort(bases_.begin(), bases_.end(),
            [](const BaseStation& a, const BaseStation& b) { return a.id < b.id; });

  for (std::size_t i = 0; i + 1 < sinks_.size(); ++i) {
    if (sinks_[i].id == sinks_[i + 1].id) {
      throw ParameterError("duplicate sink id " + std::to_string(sinks_[i].id));
    }
  }
  for (std::size_t i = 0; i + 1 < bases_.size(); ++i) {
    if (bases_[i].id == bases_[i + 1].id) {
      throw ParameterError("duplicate base id " + std::to_string(bases_[i].id));
    }
  }
  for (const SinkNode& s : sinks_) {
    if (s.revisit_deadline < 0 || s.collection_energy < 0) {
      throw ParameterError("sink " + std::to_string(s.id) +
                           " has a negative deadline or energy");
    }
  }
  for (const BaseStation& b : bases_) {
    if (b.capacity < 1) {
      throw ParameterError("base " + std::to_string(b.id) + " capacity must be >= 1");
    }
  }

  order_.clear();
  int next = 0;
  for (const SinkNode& s : sinks_) order_[NodeRef::sink(s.id)] = next++;
  for (const BaseStation& b : bases_) order_[NodeRef::base(b.id)] = next++;

  // normalize, dedupe and sanity-check edges
  std::set<std::pair<NodeRef, NodeRef>> seen;
  for (UavEdge& e : edges_) {
    if (e.b < e.a) std::swap(e.a, e.b);
    if (!order_.count(e.a) || !order_.count(e.b)) {
      throw ParameterError("edge " + e.a.label() + "-" + e.b.label() +
                           " references an unknown node");
    }
    if (e.a == e.b) {
      throw ParameterError("self loop at " + e.a.label());
    }
    if (e.a.is_base() && e.b.is_base()) {
      throw ParameterError("edge " + e.a.label() + "-" + e.b.label() +
                           " connects two base stations");
    }
    if (e.energy < 0 || e.length < 0) {
      throw ParameterError("edge " + e.a.label() + "-" + e.b.label() +
                           " has a negative weight");
    }
    if (!seen.insert({e.a, e.b}).second) {
      throw ParameterError("duplicate edge " + e.a.label() + "-" + e.b.label());
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const UavEdge& x, const UavEdge& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });

  adjacency_.clear();
  for (const auto& [node, idx] : order_) {
    (void)idx;
    adjacency_[node];  // every node gets a (possibly empty) list
  }
  for (const UavEdge& e : edges_) {
    adjacency_[e.a].push_back({e.b, e.energy, e.length});
    adjacency_[e.b].push_back({e.a, e.energy, e.length});
  }
  for (auto& [node, list] : adjacency_) {
    (void)node;
    std::sort(list.begin(), list.end(), [](const Neighbor& x, const Neighbor& y) {
      return x.node < y.node;
    });
  }

  if (mode == Validation::Strict && !sinks_.empty()) {
    for (const BaseStation& b : bases_) {
      if (adjacency_.at(NodeRef::base(b.id)).empty()) {
        throw ParameterError("base B" + std::to_string(b.id) + " has no UAV edge");
      }
    }
    // sink subgraph must be connected
    std::set<int> visited;
    std::vector<int> stack{sinks_.front().id};
    visited.insert(stack.back());
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : adjacency_.at(NodeRef::sink(cur))) {
        if (nb.node.is_sink() && visited.insert(nb.node.id).second) {
          stack.push_back(nb.node.id);
        }
      }
    }
    if (visited.size() != sinks_.size()) {
      throw ParameterError("sink subgraph is not connected (" +
                           std::to_string(visited.size()) + " of " +
                           std::to_string(sinks_.size()) + " reachable)");
    }
  }
}

bool Network::has_sink(int id) const { return order_.count(NodeRef::sink(id)) > 0; }
bool Network::has_base(int id) const { return order_.count(NodeRef::base(id)) > 0; }
bool Network::has_node(NodeRef n) const { return order_.count(n) > 0; }

const SinkNode& Network::sink(int id) const {
  auto it = std::lower_bound(
      sinks_.begin(), sinks_.end(), id,
      [](const SinkNode& s, int key) { return s.id < key; });
  if (it == sinks_.end() || it->id != id) {
    throw ParameterError("unknown sink id " + std::to_string(id));
  }
  return *it;
}

const BaseStation& Network::base(int id) const {
  auto it = std::lower_bound(
      bases_.begin(), bases_.end(), id,
      [](const BaseStation& b, int key) { return b.id < key; });
  if (it == bases_.end() || it->id != id) {
    throw ParameterError("unknown base id " + std::to_string(id));
  }
  return *it;
}

Point Network::position(NodeRef n) const {
  return n.is_sink() ? sink(n.id).position : base(n.id).position;
}

const std::vector<Network::Neighbor>& Network::neighbors(NodeRef n) const {
  auto it = adjacency_.find(n);
  if (it == adjacency_.end()) {
    throw ParameterError("unknown node " + n.label());
  }
  return it->second;
}

const UavEdge* Network::find_edge(NodeRef a, NodeRef b) const {
  if (b < a) std::swap(a, b);
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), std::make_pair(a, b),
      [](const UavEdge& e, const std::pair<NodeRef, NodeRef>& key) {
        return std::tie(e.a, e.b) < std::tie(key.first, key.second);
      });
  if (it == edges_.end() || it->a != a || it->b != b) return nullptr;
  return &*it;
}

int Network::node_order(NodeRef n) const {
  auto it = order_.find(n);
  if (it == order_.end()) {
    throw ParameterError("unknown node " + n.label());
  }
  return it->second;
}

// ---- shortest paths --------------------------------------------------------

std::vector<std::optional<PathResult>> shortest_paths(
    const Network& net, NodeRef from, std::span<const NodeRef> targets,
    const NodeFilter& can_transit) {
  if (!net.has_node(from)) {
    throw ParameterError("unknown node " + from.label());
  }
  const std::size_t n = net.sinks().size() + net.bases().size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, kInf), path_len(n, 0.0);
  std::vector<int> prev(n, -1);
  std::vector<NodeRef> by_order(n);
  for (const SinkNode& s : net.sinks()) {
    by_order[net.node_order(NodeRef::sink(s.id))] = NodeRef::sink(s.id);
  }
  for (const BaseStation& b : net.bases()) {
    by_order[net.node_order(NodeRef::base(b.id))] = NodeRef::base(b.id);
  }

  std::vector<char> is_target(n, 0);
  for (NodeRef t : targets) {
    if (!net.has_node(t)) throw ParameterError("unknown node " + t.label());
    is_target[net.node_order(t)] = 1;
  }

  const int start = net.node_order(from);
  dist[start] = 0.0;
  using Item = std::pair<double, int>;  // (distance, node order) for stable pops
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.push({0.0, start});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    NodeRef un = by_order[u];
    // targets absorb; other interior nodes need the caller's permission
    if (u != start && (is_target[u] || !can_transit(un))) continue;
    for (const Network::Neighbor& nb : net.neighbors(un)) {
      int v = net.node_order(nb.node);
      double nd = d + nb.energy;
      if (nd < dist[v]) {
        dist[v] = nd;
        path_len[v] = path_len[u] + nb.length;
        prev[v] = u;
        pq.push({nd, v});
      }
    }
  }

  std::vector<std::optional<PathResult>> out(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    int t = net.node_order(targets[i]);
    if (targets[i] == from) {
      out[i] = PathResult{{from}, 0.0, 0.0};
      continue;
    }
    if (dist[t] == kInf) continue;
    PathResult r;
    r.energy = dist[t];
    r.length = path_len[t];
    for (int cur = t; cur != -1; cur = prev[cur]) r.nodes.push_back(by_order[cur]);
    std::reverse(r.nodes.begin(), r.nodes.end());
    out[i] = std::move(r);
  }
  return out;
}

PathResult shortest_uav_path(const Network& net, NodeRef from, NodeRef to) {
  if (!net.has_node(to)) throw ParameterError("unknown node " + to.label());
  if (from == to) return PathResult{{from}, 0.0, 0.0};
  NodeRef targets[1] = {to};
  auto res = shortest_paths(net, from, targets, [](const NodeRef&) { return true; });
  if (!res[0]) {
    throw NoPathError("no route from " + from.label() + " to " + to.label());
  }
  return *res[0];
}

// ---- random generation -----------------------------------------------------

namespace {

// Implementation-defined std distributions would break cross-platform
// reproducibility, so draws come straight off the engine.
double uniform_unit(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& eng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(eng);
}

void check_interval(const Interval& iv, const char* what) {
  if (!iv.valid()) {
    throw ParameterError(std::string(what) + " interval must satisfy 0 <= lo <= hi");
  }
}

}  // namespace

Network generate_random_network(const RandomNetworkSpec& spec, std::uint64_t seed) {
  if (spec.n_sinks < 1) throw ParameterError("n_sinks must be >= 1");
  if (spec.n_bases < 1) throw ParameterError("n_bases must be >= 1");
  if (spec.area_side <= 0) throw ParameterError("area_side must be positive");
  if (spec.base_links < 1) throw ParameterError("base_links must be >= 1");
  if (spec.energy_per_metre <= 0) throw ParameterError("energy_per_metre must be positive");
  check_interval(spec.deadline_range, "deadline");
  check_interval(spec.energy_range, "energy");

  std::mt19937_64 eng(seed);
  std::vector<SinkNode> sinks;
  sinks.reserve(spec.n_sinks);
  for (int i = 1; i <= spec.n_sinks; ++i) {
    SinkNode s;
    s.id = i;
    s.position = {uniform_in(eng, 0, spec.area_side), uniform_in(eng, 0, spec.area_side)};
    s.revisit_deadline = uniform_in(eng, spec.deadline_range.lo, spec.deadline_range.hi);
    s.collection_energy = uniform_in(eng, spec.energy_range.lo, spec.energy_range.hi);
    sinks.push_back(s);
  }

  const int links = std::min(spec.base_links, spec.n_sinks);
  std::vector<BaseStation> bases;
  bases.reserve(spec.n_bases);
  for (int i = 1; i <= spec.n_bases; ++i) {
    BaseStation b;
    b.id = i;
    b.position = {uniform_in(eng, 0, spec.area_side), uniform_in(eng, 0, spec.area_side)};
    b.capacity = links;
    bases.push_back(b);
  }

  std::vector<UavEdge> edges;
  edges.reserve(static_cast<std::size_t>(spec.n_sinks) * (spec.n_sinks - 1) / 2 +
                static_cast<std::size_t>(spec.n_bases) * links);
  for (int i = 0; i < spec.n_sinks; ++i) {
    for (int j = i + 1; j < spec.n_sinks; ++j) {
      double d = distance(sinks[i].position, sinks[j].position);
      edges.push_back({NodeRef::sink(sinks[i].id), NodeRef::sink(sinks[j].id),
                       d * spec.energy_per_metre, d});
    }
  }
  for (const BaseStation& b : bases) {
    std::vector<std::pair<double, int>> ranked;  // (distance, sink id)
    ranked.reserve(sinks.size());
    for (const SinkNode& s : sinks) {
      ranked.push_back({distance(b.position, s.position), s.id});
    }
    std::sort(ranked.begin(), ranked.end());
    for (int k = 0; k < links; ++k) {
      edges.push_back({NodeRef::base(b.id), NodeRef::sink(ranked[k].second),
                       ranked[k].first * spec.energy_per_metre, ranked[k].first});
    }
  }

  return Network::build(std::move(sinks), std::move(bases), std::move(edges));
}

Network with_random_node_attributes(const Network& net,
                                    std::optional<Interval> deadline_range,
                                    std::optional<Interval> energy_range,
                                    std::uint64_t seed) {
  if (deadline_range) check_interval(*deadline_range, "deadline");
  if (energy_range) check_interval(*energy_range, "energy");
  std::mt19937_64 eng(seed);
  std::vector<SinkNode> sinks = net.sinks();
  for (SinkNode& s : sinks) {
    if (deadline_range) {
      s.revisit_deadline = uniform_in(eng, deadline_range->lo, deadline_range->hi);
    }
    if (energy_range) {
      s.collection_energy = uniform_in(eng, energy_range->lo, energy_range->hi);
    }
  }
  return Network::build(std::move(sinks), net.bases(), net.uav_edges(),
                        Network::Validation::Strict, net.sensor_nodes(),
                        net.wireless_links());
}

}  // namespace datamule
